#pragma once

#include <stdexcept>
#include <string>

namespace lgl {

// Failure kinds surfaced by loaders and operations.  The CLI maps these to
// process exit codes: budget_exceeded -> 3, everything else here -> 2.
enum class errc {
    unknown_element,
    order_cycle,
    no_meet,
    no_join,
    size_cap,
    not_closed_table,
    no_identity,
    no_inverse,
    not_associative,
    bad_permutation,
    order_cap,
    lattice_mismatch,
    carrier_mismatch,
    not_a_chain,
    not_an_lsubgroup,
    not_contained,
    not_comparable,
    tip_equals_tail,
    budget_exceeded,
    no_witness,
    unknown_suite,
    bad_input,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace lgl
