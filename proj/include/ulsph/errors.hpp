#pragma once

#include <stdexcept>
#include <string>

namespace ulsph {

// Invalid user-facing configuration (bad material, unknown key, ...). CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidMaterial : ConfigError {
    explicit InvalidMaterial(const std::string& what) : ConfigError(what) {}
};

// Fatal numerical failure during a run (NaN state, coincident particles, ...). CLI exit code 3.
struct SimulationError : std::runtime_error {
    SimulationError(const std::string& what, int particle_index = -1, double time = -1.0)
        : std::runtime_error(what), particle(particle_index), time(time) {}
    int particle;
    double time;
};

struct DegenerateNeighborhood : SimulationError {
    DegenerateNeighborhood(const std::string& what, int particle_index)
        : SimulationError(what, particle_index) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ulsph
