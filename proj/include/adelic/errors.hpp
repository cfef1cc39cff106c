#ifndef ADELIC_ERRORS_HPP
#define ADELIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adelic {

// Error taxonomy. The CLI maps these onto distinct exit codes:
// config -> 3, data integrity/parse -> 4, everything numerical -> 2.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct wrong_place_error : error { using error::error; };
struct divergence_error : error { using error::error; };
struct precision_error : error { using error::error; };
struct invariance_error : error { using error::error; };
struct capacity_error : error { using error::error; };
struct pole_error : error { using error::error; };
struct support_error : error { using error::error; };
struct calibration_error : error { using error::error; };
struct grid_error : error { using error::error; };
struct accuracy_error : error { using error::error; };
struct truncation_error : error { using error::error; };
struct integrity_error : error { using error::error; };
struct config_error : error { using error::error; };

} // namespace adelic

#endif
