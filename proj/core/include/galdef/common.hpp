#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galdef {

// Input or precondition violation (bad arguments, unsupported ring, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural identity that the theory promises has failed on concrete data.
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broken; always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

#define GALDEF_CHECK(cond, msg)                                                          \
    do {                                                                                 \
        if (!(cond)) throw ::galdef::input_error(msg);                                   \
    } while (0)

#define GALDEF_ASSERT(cond, msg)                                                         \
    do {                                                                                 \
        if (!(cond)) throw ::galdef::internal_error(std::string("assertion failed: ") + msg); \
    } while (0)

} // namespace galdef
