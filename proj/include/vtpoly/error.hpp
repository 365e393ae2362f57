#pragma once

#include <stdexcept>
#include <string>

namespace vtpoly {

enum class Errc {
    // orbit symbols
    not_core_rotation,
    repeated_entry,
    product_not_identity,
    type2_order_two,
    malformed_symbol,
    // candidate maps
    invalid_symbol_set,
    polyhedrality_violation,
    // geometric isomorphism
    not_in_normalizer,
    unrealizable_orbit,
    // geometry / realization
    degenerate_triangle,
    zero_vector,
    not_embedded,
    // io
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace vtpoly
