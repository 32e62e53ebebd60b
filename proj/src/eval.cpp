#include "lambang/eval.hpp"

namespace lambang {

namespace {

// Annotations are typing hints, invisible to the dynamics.
const TermPtr& peel(const TermPtr& t) {
  const TermPtr* p = &t;
  while ((*p)->kind == TermKind::Ann) p = &(*p)->kids[0];
  return *p;
}

}  // namespace

MonadVal<TermV> eval_fuel(const TermPtr& e0, int fuel, Monad m) {
  const TermPtr& e = peel(e0);
  if (fuel <= 0) return mv::bottom<TermV>(m);
  switch (e->kind) {
    case TermKind::Ret:
      return mv::unit(m, TermV(e->kids[0]));
    case TermKind::App: {
      const TermPtr& v = peel(e->kids[0]);
      if (v->kind != TermKind::Lam)
        throw MonadError("ill-formed redex (non-abstraction applied): " + term_to_string(e));
      return eval_fuel(subst_value(v->kids[0], v->name, e->kids[1]), fuel - 1, m);
    }
    case TermKind::Let: {
      MonadVal<TermV> head = eval_fuel(e->kids[0], fuel - 1, m);
      return mv::bind(head, [&](const TermV& v) {
        return eval_fuel(subst_value(e->kids[1], e->name, v.term), fuel - 1, m);
      });
    }
    case TermKind::LetBang: {
      const TermPtr& v = peel(e->kids[0]);
      if (v->kind != TermKind::Bang)
        throw MonadError("ill-formed redex (let ! on a non-bang): " + term_to_string(e));
      return eval_fuel(subst_comp(e->kids[1], e->name, v->kids[0]), fuel - 1, m);
    }
    case TermKind::OpApp: {
      std::vector<MonadVal<TermV>> args;
      args.reserve(e->kids.size());
      for (const auto& a : e->kids) args.push_back(eval_fuel(a, fuel - 1, m));
      return mv::apply_op(m, e->name, args);
    }
    case TermKind::VarNonLin:
      throw MonadError("evaluation of an open term (free '" + e->name + "')");
    default:
      throw MonadError("not a computation: " + term_to_string(e));
  }
}

EvalResult eval(const TermPtr& e, int budget, Monad m) {
  MonadVal<TermV> at_budget = eval_fuel(e, budget, m);
  MonadVal<TermV> next = eval_fuel(e, budget + 1, m);
  return {at_budget, budget, mv::mval_eq(at_budget, next)};
}

}  // namespace lambang
