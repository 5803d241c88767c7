#pragma once

#include <stdexcept>
#include <string>

namespace hexarc {

enum class Errc {
  bad_vertex,
  loop_edge,
  duplicate_edge,
  disconnected,
  degree_mismatch,
  unsupported_field,
  dependent_points,
  validation_failed,
  not_regular,
  not_transitive,
  not_arc_transitive,
  not_self_paired,
  not_suborbit,
  ambiguous_suborbit,
  no_such_suborbit,
  not_semiregular,
  not_automorphism,
  not_in_table,
  intra_block_edge,
  degenerate_quotient,
  too_few_blocks,
  budget_exceeded,
  too_large,
  bad_argument,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hexarc
