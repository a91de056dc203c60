#pragma once

#include <stdexcept>
#include <string>

namespace cvejoin {

// Every failure mode of the public API, one code per named error.
enum class errc {
    self_loop,
    duplicate_edge,
    endpoint_out_of_range,
    invalid_size,
    empty_list,
    no_edges,
    vertex_out_of_range,
    disconnected,
    no_convergence,
    not_regular,
    missing_regularity,
    precondition_violated,
    closed_form_unavailable,
    too_small,
    h1_not_eligible,
    h2_least_eig_too_small,
    mixed_orders,
    empty_edge_set_g1,
    empty_g2,
    empty_g3,
    parse_error,
    io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace cvejoin
