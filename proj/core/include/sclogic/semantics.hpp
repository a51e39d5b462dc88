#pragma once

#include <map>
#include <string>

#include "sclogic/term.hpp"
#include "sclogic/tree.hpp"

namespace scl {

// Variable environment mapping variable names to already-evaluated trees.
using VarEnv = std::map<std::string, EvalTree>;

// Short-circuit evaluation of a closed term (any mixture of the sequential
// and conditional signatures):
//   se(T) = T                      se(!P)          = se(P)[T->F, F->T]
//   se(F) = F                      se(P && Q)      = se(P)[T->se(Q)]
//   se(a) = T <a> F                se(P || Q)      = se(P)[F->se(Q)]
//                                  se(x <| y |> z) = se(y)[T->se(x), F->se(z)]
// Throws on open terms.
EvalTree se(const Term& p);

// Memorizing evaluation: memorize(se(p)). Result is a decision tree.
EvalTree mse(const Term& p);

// Open-term variants: variables evaluate to their environment tree. Unbound
// variables are an error. A shared TreeOps makes batch evaluation cheap.
EvalTree se(const Term& p, const VarEnv& env, TreeOps& ops);
EvalTree mse(const Term& p, const VarEnv& env, TreeOps& ops);

}  // namespace scl
