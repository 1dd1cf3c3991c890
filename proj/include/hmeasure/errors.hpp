#pragma once

#include <stdexcept>

namespace hmeasure {

// Error categories map 1:1 onto CLI exit codes (config=2, io=3, data=4).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hmeasure
