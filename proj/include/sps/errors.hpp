// errors.hpp — error codes shared by all sps modules.
#pragma once

#include <stdexcept>
#include <string>

namespace sps {

enum class errc {
    non_finite,
    negative_value,
    non_positive_rate,
    out_of_range,
    non_positive_width,
    zero_coupling,
    grid_too_narrow,
    grid_too_coarse,
    multimodal,
    step_too_large,
    bad_config,
    io_error,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw Error(c, what); }

} // namespace sps
