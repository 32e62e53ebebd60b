#include "lambang/prelude.hpp"

namespace lambang {
namespace prelude {

TypePtr iota() { return tmu_lolli("X", tvar("X"), tvar("X")); }

TermPtr identity() { return lam("x", ret(var_lin("x"))); }

TermPtr omega(const TypePtr& ty) {
  TermPtr w = lam("x", let_bang(var_lin("x"), "a",
                                let_(var_nonlin("a"), "z",
                                     app(var_lin("z"), bang(var_nonlin("a"))))));
  // w : s with s = mu Y. !Y -o ty; the annotation makes the self-application
  // checkable.
  TypePtr s = tmu_lolli("Y", tbang(tvar("Y")), ty);
  TermPtr w_ann = ann(w, s);
  return app(w_ann, bang(ret(w_ann)));
}

ExamplePairs example_pairs() {
  ExamplePairs ex;
  ex.arg_type = tbang(iota());
  ex.conv = ret(bang(ret(identity())));
  ex.div = omega(ex.arg_type);

  // \x. choice(e, f) with e = return x and f consuming x before diverging,
  // so each branch uses the linear argument exactly once.
  TermPtr f_open = let_bang(var_lin("x"), "c", omega(ex.arg_type));
  ex.lambda_type = tlolli(ex.arg_type, ex.arg_type);
  ex.lambda_lhs = ret(lam("x", op_app("choice", {ret(var_lin("x")), f_open})));
  ex.lambda_rhs = op_app("choice", {ret(identity()), ret(lam("x", f_open))});

  ex.bang_type = tbang(ex.arg_type);
  ex.bang_lhs = ret(bang(op_app("choice", {ex.conv, ex.div})));
  ex.bang_rhs = op_app("choice", {ret(bang(ex.conv)), ret(bang(ex.div))});
  return ex;
}

}  // namespace prelude
}  // namespace lambang
