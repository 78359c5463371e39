#pragma once

#include "tfe/form.hpp"
#include <string>
#include <vector>

namespace tfe {

/** canonical serialization of an expression: sorted (monomial, coefficient) strings */
using TermPayload = std::vector<std::pair<std::string, std::string>>;

inline TermPayload payload(FormWorkspace const &ws, FormExpr const &e)
{
	TermPayload p;
	for (auto &[m, c] : e.terms()) {
		std::string mono;
		for (auto g : m)
			mono += (mono.empty() ? "" : "^") + ws.gen(g).name;
		p.push_back({mono.empty() ? "1" : mono, c.str()});
	}
	std::sort(p.begin(), p.end());
	return p;
}

enum class TermClass { bulk, boundary, wessZumino };

inline char const *term_class_name(TermClass c)
{
	switch (c) {
	case TermClass::bulk:
		return "bulk";
	case TermClass::boundary:
		return "boundary";
	default:
		return "wessZumino";
	}
}

/**
 * Named decomposition of a derived action: ordered labeled pieces with exact
 * canonical payloads; boundary pieces carry their potential X (term = dX).
 */
struct LagrangianReport {
	struct Term {
		std::string label;
		TermClass cls = TermClass::bulk;
		TermPayload expr;
		std::optional<TermPayload> potential; // for boundary terms: X with term = dX
	};
	std::string name;
	std::vector<Term> terms;
	std::vector<std::pair<std::string, std::string>> params;
};

} // namespace tfe
