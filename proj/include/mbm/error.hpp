#pragma once

#include <stdexcept>
#include <string>

namespace mbm {

enum class errc {
    out_of_range_node,
    self_loop,
    overlapping_sets,
    invalid_bisection,
    update_not_legal,
    schedule_exhausted,
    step_budget_exceeded,
    odd_order,
    forbidden_graph,
    invalid_witness,
    structurally_forbidden,
    no_special_found,
    not_a_minority,
    precondition_violated,
    too_large,
    parse_error,
    not_2p2n,
    epsilon_out_of_range,
    clique_size_out_of_range,
    io_error,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace mbm
