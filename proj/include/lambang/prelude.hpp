#pragma once

#include "lambang/term.hpp"
#include "lambang/type.hpp"

namespace lambang {
namespace prelude {

// iota = mu X. X -o X, the smallest closed arrow type; its identity
// inhabitant \x. return x is the workhorse value of the test corpus.
TypePtr iota();
TermPtr identity();  // \x. return x

// A divergent closed computation of an arbitrary type, built through the
// recursive type s = !s -o ty:
//   w     = \x. let !a = x in let z = a in z (!a)     : !s -o ty
//   omega = w !(return w)                             : ty
TermPtr omega(const TypePtr& ty);

// The running-example pairs at argument type !iota. `conv` converges to a
// banged identity, `div` diverges; both are closed computations of type
// !iota.
// Distribution of abstraction over choice (valid under linearity):
//   lhs: return \x. choice(return x, let !c = x in omega)
//   rhs: choice(return \x. return x, return \x. let !c = x in omega)
// Distribution of bang over choice (invalid; separation 1/4 vs 1/2):
//   lhs: return !(choice(conv, div))
//   rhs: choice(return !conv, return !div)
struct ExamplePairs {
  TypePtr arg_type;        // !iota
  TermPtr conv, div;       // closed computations of type !iota
  TypePtr lambda_type;     // !iota -o !iota
  TermPtr lambda_lhs, lambda_rhs;
  TypePtr bang_type;       // !!iota
  TermPtr bang_lhs, bang_rhs;
};

ExamplePairs example_pairs();

}  // namespace prelude
}  // namespace lambang
