#pragma once

#include <stdexcept>
#include <string>

namespace mgtd {

// Error categories map 1:1 onto CLI exit codes (see tools/mgtd.cpp).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable, missing, or unparseable input files.
struct io_error : error {
    using error::error;
};

// Corrupt or mismatched persisted artifacts (vocabulary/model files).
struct artifact_error : error {
    using error::error;
};

// Inputs that are individually valid but mutually inconsistent.
struct input_error : error {
    using error::error;
};

// Training could not produce a model.
struct train_error : error {
    using error::error;
};

} // namespace mgtd
