#pragma once

#include <stdexcept>
#include <string>

namespace tfe {

enum class errc {
	overflow,
	duplicate_generator,
	malformed_coefficient,
	index_out_of_range,
	basis_mismatch,
	not_closed,
	singular_basis,
	unknown_name,
	unsupported_dimension,
	unsupported_family,
	not_commutative,
	not_associative,
	bad_zero,
	not_resonant,
	no_zero_element,
	rank_mismatch,
	missing_d_rule,
	non_polynomial_coefficient,
	not_rational,
	residual_y_dependence,
	missing_rewrite_rule,
	chain_not_nested,
	domain_error,
	usage_error,
	input_parse_error,
};

class Error : public std::runtime_error
{
  public:
	Error(errc c, std::string const &msg) : std::runtime_error(msg), code_(c) {}
	errc code() const { return code_; }

  private:
	errc code_;
};

[[noreturn]] inline void fail(errc c, std::string const &msg)
{
	throw Error(c, msg);
}

} // namespace tfe
