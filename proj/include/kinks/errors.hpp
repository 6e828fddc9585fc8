#pragma once

#include <stdexcept>
#include <string>

namespace kinks {

/// Malformed or semantically invalid input (parse failures, bad family
/// parameters, violated operation preconditions). CLI maps this to exit 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant (nonplanar rotation data, Vogel iteration cap,
/// parity violations). CLI maps this to exit 3.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace detail

} // namespace kinks
