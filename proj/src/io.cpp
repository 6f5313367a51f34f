#include "ulsph/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ulsph/diagnostics.hpp"
#include "ulsph/errors.hpp"

namespace ulsph {

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    double v = parse_double(key, value);
    int i = static_cast<int>(v);
    if (i != v) throw ConfigError("config: key '" + key + "' expects an integer, got '" + value + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config: key '" + key + "' expects a boolean, got '" + value + "'");
}

}  // namespace

void apply_config_key(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    std::string key = lower(trim(raw_key));
    std::string value = trim(raw_value);
    if (key == "scenario") {
        cfg.scenario = lower(value);
    } else if (key == "hdp") {
        cfg.hdp = parse_double(key, value);
    } else if (key == "dp") {
        cfg.dp = parse_double(key, value);
    } else if (key == "vf") {
        cfg.v_f = parse_double(key, value);
    } else if (key == "v0") {
        cfg.v0_frac = parse_double(key, value);
    } else if (key == "mode_m" || key == "m") {
        cfg.mode_m = parse_int(key, value);
    } else if (key == "mode_n" || key == "n") {
        cfg.mode_n = parse_int(key, value);
    } else if (key == "rho0") {
        cfg.rho0 = parse_double(key, value);
    } else if (key == "e" || key == "young_modulus") {
        cfg.young_modulus = parse_double(key, value);
    } else if (key == "nu" || key == "poisson_ratio") {
        cfg.poisson_ratio = parse_double(key, value);
    } else if (key == "formulation") {
        std::string v = lower(value);
        if (v == "enog")
            cfg.sim.formulation = Formulation::enog;
        else if (v == "og")
            cfg.sim.formulation = Formulation::og;
        else
            throw ConfigError("config: formulation must be 'enog' or 'og', got '" + value + "'");
    } else if (key == "stepping") {
        std::string v = lower(value);
        if (v == "dual")
            cfg.sim.stepping = Stepping::dual;
        else if (v == "single")
            cfg.sim.stepping = Stepping::single;
        else
            throw ConfigError("config: stepping must be 'dual' or 'single', got '" + value + "'");
    } else if (key == "laplacian") {
        std::string v = lower(value);
        if (v == "conservative")
            cfg.sim.laplacian = LaplacianForm::conservative;
        else if (v == "plain")
            cfg.sim.laplacian = LaplacianForm::plain;
        else
            throw ConfigError("config: laplacian must be 'conservative' or 'plain', got '" +
                              value + "'");
    } else if (key == "geometry") {
        std::string v = lower(value);
        if (v == "frozen")
            cfg.sim.geometry = PairGeometry::frozen;
        else if (v == "live")
            cfg.sim.geometry = PairGeometry::live;
        else
            throw ConfigError("config: geometry must be 'frozen' or 'live', got '" + value + "'");
    } else if (key == "track_stress") {
        cfg.sim.track_stress = parse_bool(key, value);
    } else if (key == "end_time" || key == "end") {
        cfg.sim.end_time = parse_double(key, value);
        cfg.end_time_set = true;
    } else if (key == "output_interval") {
        cfg.sim.output_interval = parse_double(key, value);
    } else if (key == "output_dir" || key == "out") {
        cfg.output_dir = value;
    } else if (key == "zeta") {
        cfg.sim.zeta = parse_double(key, value);
    } else if (key == "cfl_advection") {
        cfg.sim.cfl_advection = parse_double(key, value);
    } else if (key == "cfl_acoustic") {
        cfg.sim.cfl_acoustic = parse_double(key, value);
    } else if (key == "v_floor") {
        cfg.sim.v_floor_fraction = parse_double(key, value);
    } else if (key == "vtk") {
        cfg.write_vtk = parse_bool(key, value);
    } else if (key == "seed") {
        // reserved; all builders are deterministic
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

RunConfig parse_run_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " is not a 'key = value' pair: '" + stripped + "'");
        apply_config_key(cfg, stripped.substr(0, eq), stripped.substr(eq + 1));
    }
    if (cfg.scenario.empty()) throw ConfigError("config: missing required key 'scenario'");
    return cfg;
}

RunConfig parse_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config_text(ss.str());
}

template <int D>
void write_snapshot(const ParticleSet<D>& ps, double time, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SimulationError("cannot open snapshot file '" + path + "'");
    out << "time,N,dimension\n";
    out << format_sci(time) << ',' << ps.size() << ',' << D << '\n';
    out << "id";
    const char* axes = "xyz";
    for (int k = 0; k < D; ++k) out << ',' << axes[k];
    for (int k = 0; k < D; ++k) out << ",v" << axes[k];
    out << ",density,von_mises\n";
    for (int i = 0; i < ps.size(); ++i) {
        out << i;
        for (int k = 0; k < D; ++k) out << ',' << format_sci(ps.pos[i][k]);
        for (int k = 0; k < D; ++k) out << ',' << format_sci(ps.vel[i][k]);
        out << ',' << format_sci(ps.rho[i]) << ',' << format_sci(von_mises(ps.shear_stress[i]))
            << '\n';
    }
    if (!out) throw SimulationError("failed writing snapshot file '" + path + "'");
}

template <int D>
void write_snapshot_vtk(const ParticleSet<D>& ps, double time, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SimulationError("cannot open snapshot file '" + path + "'");
    const int n = ps.size();
    out << "# vtk DataFile Version 2.0\n";
    out << "particle snapshot t=" << format_sci(time) << '\n';
    out << "ASCII\nDATASET POLYDATA\n";
    out << "POINTS " << n << " double\n";
    for (int i = 0; i < n; ++i) {
        out << ps.pos[i][0] << ' ' << ps.pos[i][1] << ' ' << (D == 3 ? ps.pos[i][D - 1] : 0.0)
            << '\n';
    }
    out << "POINT_DATA " << n << '\n';
    out << "SCALARS density double 1\nLOOKUP_TABLE default\n";
    for (int i = 0; i < n; ++i) out << ps.rho[i] << '\n';
    out << "SCALARS von_mises double 1\nLOOKUP_TABLE default\n";
    for (int i = 0; i < n; ++i) out << von_mises(ps.shear_stress[i]) << '\n';
    out << "VECTORS velocity double\n";
    for (int i = 0; i < n; ++i) {
        out << ps.vel[i][0] << ' ' << ps.vel[i][1] << ' ' << (D == 3 ? ps.vel[i][D - 1] : 0.0)
            << '\n';
    }
    if (!out) throw SimulationError("failed writing snapshot file '" + path + "'");
}

SnapshotData read_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open snapshot file '" + path + "'");
    SnapshotData data;
    std::string line;
    std::getline(in, line);  // header names
    std::getline(in, line);  // header values
    {
        std::istringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        data.time = std::stod(tok);
        std::getline(ss, tok, ',');
        std::getline(ss, tok, ',');
        data.dimension = std::stoi(tok);
    }
    std::getline(in, line);  // column names
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
        data.rows.push_back(std::move(row));
    }
    return data;
}

template <int D>
void write_probe_csv(const ProbeSeries<D>& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SimulationError("cannot open probe file '" + path + "'");
    out << "time";
    const char* axes = "xyz";
    for (int k = 0; k < D; ++k) out << ",d" << axes[k];
    out << '\n';
    for (int s = 0; s < series.size(); ++s) {
        out << format_sci(series.time[s]);
        for (int k = 0; k < D; ++k) out << ',' << format_sci(series.displacement[s][k]);
        out << '\n';
    }
    if (!out) throw SimulationError("failed writing probe file '" + path + "'");
}

template void write_snapshot<2>(const ParticleSet<2>&, double, const std::string&);
template void write_snapshot<3>(const ParticleSet<3>&, double, const std::string&);
template void write_snapshot_vtk<2>(const ParticleSet<2>&, double, const std::string&);
template void write_snapshot_vtk<3>(const ParticleSet<3>&, double, const std::string&);
template void write_probe_csv<2>(const ProbeSeries<2>&, const std::string&);
template void write_probe_csv<3>(const ProbeSeries<3>&, const std::string&);

}  // namespace ulsph
