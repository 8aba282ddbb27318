#include "ivlab/enclosure.hpp"

#include <string>

#include "ivlab/error.hpp"

namespace ivlab {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::MooreNewton: return "moore-newton";
    case Method::KingLike: return "king-like";
    case Method::ThreePoint: return "three-point";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "moore-newton" || text == "newton") return Method::MooreNewton;
  if (text == "king-like" || text == "king" || text == "ostrowski") return Method::KingLike;
  if (text == "three-point" || text == "modified") return Method::ThreePoint;
  throw Error(ErrorCode::ConfigInvalid, "unknown method '" + std::string(text) + "'");
}

std::string_view to_string(StepStatus status) {
  switch (status) {
    case StepStatus::Ok: return "Ok";
    case StepStatus::ZeroFound: return "ZeroFound";
    case StepStatus::EmptyIntersection: return "EmptyIntersection";
    case StepStatus::DegenerateFactor: return "DegenerateFactor";
    case StepStatus::DerivativeStraddlesZero: return "DerivativeStraddlesZero";
    case StepStatus::Unresolved: return "Unresolved";
  }
  return "Unknown";
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Newton: return "N";
    case Stage::King: return "K";
    case Stage::Modified: return "M";
  }
  return "?";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Converged: return "Converged";
    case Outcome::ZeroFound: return "ZeroFound";
    case Outcome::InclusionLost: return "InclusionLost";
    case Outcome::EmptyIntersection: return "EmptyIntersection";
    case Outcome::DegenerateFactor: return "DegenerateFactor";
    case Outcome::DerivativeStraddlesZero: return "DerivativeStraddlesZero";
    case Outcome::PrecisionExhausted: return "PrecisionExhausted";
    case Outcome::MaxIterations: return "MaxIterations";
  }
  return "Unknown";
}

template <class T>
bool has_sign_change(const Polynomial& f, const Interval<T>& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return f.sign_at(x.lo()) * f.sign_at(x.hi()) <= 0;
  } else {
    const Interval<T> a = eval_at(f, x.lo());
    const Interval<T> b = eval_at(f, x.hi());
    const bool same_sign = (a.strictly_positive() && b.strictly_positive()) ||
                           (a.strictly_negative() && b.strictly_negative());
    return !same_sign;
  }
}

namespace {

bool is_exact_zero(const auto& enclosure) { return enclosure.is_point() && is_zero(enclosure.lo()); }

template <class T>
void audit(StepRecord<T>& r, const BracketedFunction& f, Stage stage, const Interval<T>& produced,
           const std::optional<Rational>& reference_zero) {
  StageAudit a{stage, has_sign_change(f.f(), produced), std::nullopt};
  if (reference_zero) a.known_zero_inside = contains(produced, *reference_zero);
  r.sign_change_ok = r.sign_change_ok && a.sign_change_ok;
  if (a.known_zero_inside) r.known_zero_inside = r.known_zero_inside.value_or(true) && *a.known_zero_inside;
  const bool lost = !a.sign_change_ok || a.known_zero_inside == false;
  if (lost && !r.failed_stage) r.failed_stage = stage;
  r.audits.push_back(a);
}

template <class T>
StepRecord<T>& fail(StepRecord<T>& r, StepStatus status, Stage stage) {
  r.status = status;
  r.failed_stage = stage;
  return r;
}

template <class T>
StepRecord<T>& zero_found(StepRecord<T>& r, const BracketedFunction& f, Stage stage, const T& at,
                          const std::optional<Rational>& reference_zero) {
  r.status = StepStatus::ZeroFound;
  r.zero = at;
  r.x_next = Interval<T>::point(at);
  audit(r, f, stage, *r.x_next, reference_zero);
  return r;
}

// Shared first stage: F'(X), N(X) at md(X), Y = N ∩ X. Returns false when the
// record is already final.
template <class T>
bool newton_stage(StepRecord<T>& r, const BracketedFunction& f, const Interval<T>& x, T& mid,
                  Interval<T>& f_mid, const std::optional<Rational>& reference_zero) {
  r.x = x;
  r.slope = derivative_range(f, x);
  if (r.slope->contains_zero()) {
    fail(r, StepStatus::DerivativeStraddlesZero, Stage::Newton);
    return false;
  }
  mid = midpoint(x);
  f_mid = eval_at(f.f(), mid);
  if (is_exact_zero(f_mid)) {
    zero_found(r, f, Stage::Newton, mid, reference_zero);
    return false;
  }
  r.newton = Interval<T>::point(mid) - f_mid / *r.slope;
  r.y = intersect(*r.newton, x);
  if (!r.y) {
    fail(r, StepStatus::EmptyIntersection, Stage::Newton);
    return false;
  }
  audit(r, f, Stage::Newton, *r.y, reference_zero);
  return true;
}

// md(A) - correction * f(md(A)) / F'(X) with correction = (1 + b t)/(1 + (b-2) t).
template <class T>
Interval<T> shifted_newton(const Interval<T>& correction, const T& at, const Interval<T>& f_at,
                           const Interval<T>& slope) {
  return Interval<T>::point(at) - correction * f_at / slope;
}

// Second stage shared by the flawed methods: t, c and K(X, Y). Returns false
// when the record is already final.
template <class T>
bool king_stage(StepRecord<T>& r, const BracketedFunction& f, const Interval<T>& f_mid, const Rational& beta,
                Interval<T>& correction, const std::optional<Rational>& reference_zero) {
  if (f_mid.contains_zero()) {
    fail(r, StepStatus::Unresolved, Stage::King);
    return false;
  }
  const T mid_y = midpoint(*r.y);
  const Interval<T> f_y = eval_at(f.f(), mid_y);
  if (is_exact_zero(f_y)) {
    zero_found(r, f, Stage::King, mid_y, reference_zero);
    return false;
  }
  const Interval<T> one = Interval<T>::point(from_int<T>(1));
  const Interval<T> b = Interval<T>::enclose(beta);
  const Interval<T> t = f_y / f_mid;
  r.t = t;
  const Interval<T> numerator = one + b * t;
  const Interval<T> denominator = one + (b - Interval<T>::enclose(Rational(2))) * t;
  if (denominator.contains_zero()) {
    fail(r, StepStatus::DegenerateFactor, Stage::King);
    return false;
  }
  if (!numerator.contains_zero()) r.c = denominator / numerator;
  correction = numerator / denominator;
  r.king = shifted_newton(correction, mid_y, f_y, *r.slope);
  return true;
}

}  // namespace

template <class T>
Interval<T> newton_operator(const BracketedFunction& f, const Interval<T>& x, const T& at) {
  const Interval<T> slope = derivative_range(f, x);
  if (slope.contains_zero()) {
    throw Error(ErrorCode::DerivativeStraddlesZero, "F'(X) = " + to_string(slope, 12) + " contains 0");
  }
  return Interval<T>::point(at) - eval_at(f.f(), at) / slope;
}

template <class T>
StepRecord<T> moore_newton_step(const BracketedFunction& f, const Interval<T>& x,
                                const std::optional<Rational>& reference_zero) {
  StepRecord<T> r;
  T mid;
  Interval<T> f_mid;
  r.x = x;
  r.slope = derivative_range(f, x);
  if (r.slope->contains_zero()) return fail(r, StepStatus::DerivativeStraddlesZero, Stage::Newton);
  mid = midpoint(x);
  f_mid = eval_at(f.f(), mid);
  if (is_exact_zero(f_mid)) return zero_found(r, f, Stage::Newton, mid, reference_zero);
  r.newton = Interval<T>::point(mid) - f_mid / *r.slope;
  r.candidate = r.newton;
  r.x_next = intersect(*r.newton, x);
  if (!r.x_next) return fail(r, StepStatus::EmptyIntersection, Stage::Newton);
  audit(r, f, Stage::Newton, *r.x_next, reference_zero);
  return r;
}

template <class T>
StepRecord<T> kinglike_step(const BracketedFunction& f, const Interval<T>& x, const Rational& beta,
                            const std::optional<Rational>& reference_zero) {
  StepRecord<T> r;
  T mid;
  Interval<T> f_mid;
  if (!newton_stage(r, f, x, mid, f_mid, reference_zero)) return r;
  Interval<T> correction;
  if (!king_stage(r, f, f_mid, beta, correction, reference_zero)) return r;
  r.candidate = r.king;
  r.x_next = intersect(*r.king, x);
  if (!r.x_next) return fail(r, StepStatus::EmptyIntersection, Stage::King);
  audit(r, f, Stage::King, *r.x_next, reference_zero);
  return r;
}

template <class T>
StepRecord<T> threepoint_step(const BracketedFunction& f, const Interval<T>& x, const Rational& beta,
                              const std::optional<Rational>& reference_zero) {
  StepRecord<T> r;
  T mid;
  Interval<T> f_mid;
  if (!newton_stage(r, f, x, mid, f_mid, reference_zero)) return r;
  Interval<T> correction;
  if (!king_stage(r, f, f_mid, beta, correction, reference_zero)) return r;
  r.z = intersect(*r.king, x);
  if (!r.z) return fail(r, StepStatus::EmptyIntersection, Stage::King);
  audit(r, f, Stage::King, *r.z, reference_zero);

  const T mid_z = midpoint(*r.z);
  const Interval<T> f_z = eval_at(f.f(), mid_z);
  if (is_exact_zero(f_z)) return zero_found(r, f, Stage::Modified, mid_z, reference_zero);
  r.candidate = shifted_newton(correction, mid_z, f_z, *r.slope);
  r.x_next = intersect(*r.candidate, x);
  if (!r.x_next) return fail(r, StepStatus::EmptyIntersection, Stage::Modified);
  audit(r, f, Stage::Modified, *r.x_next, reference_zero);
  return r;
}

template <class T>
StepRecord<T> enclosure_step(const MethodSpec& method, const BracketedFunction& f, const Interval<T>& x,
                             const std::optional<Rational>& reference_zero) {
  switch (method.method) {
    case Method::MooreNewton: return moore_newton_step(f, x, reference_zero);
    case Method::KingLike: return kinglike_step(f, x, method.beta, reference_zero);
    case Method::ThreePoint: return threepoint_step(f, x, method.beta, reference_zero);
  }
  return moore_newton_step(f, x, reference_zero);
}

template <class T>
std::vector<T> EnclosureTrace<T>::radii() const {
  std::vector<T> out;
  if (steps.empty()) {
    out.push_back(radius(final_interval));
    return out;
  }
  out.push_back(radius(steps.front().x));
  for (const auto& s : steps) {
    const bool accepted =
        (s.status == StepStatus::Ok && !s.inclusion_lost()) || s.status == StepStatus::ZeroFound;
    if (!accepted || !s.x_next) break;
    out.push_back(radius(*s.x_next));
  }
  return out;
}

template <class T>
EnclosureTrace<T> run_enclosure(const MethodSpec& method, const BracketedFunction& f, const Interval<T>& x0,
                                const Rational& tol, std::size_t max_iter,
                                const std::optional<Rational>& reference_zero) {
  // In float mode the bracket is compared through its outward enclosure.
  if (!x0.subset_of(convert<T>(f.domain()))) {
    throw Error(ErrorCode::ConfigInvalid, "initial interval " + to_string(x0, 17) + " is not inside the bracket " +
                                              to_string(f.domain(), 17));
  }
  if (!has_sign_change(f.f(), x0)) {
    throw Error(ErrorCode::ConfigInvalid, "f has no sign change over " + to_string(x0, 17));
  }
  if (reference_zero && !contains(x0, *reference_zero)) {
    throw Error(ErrorCode::ConfigInvalid, "reference zero " + format_exact(*reference_zero) + " is not in " +
                                              to_string(x0, 17));
  }

  EnclosureTrace<T> trace;
  trace.method = method;
  trace.final_interval = x0;
  Interval<T> x = x0;

  auto finish = [&](Outcome o) {
    trace.outcome = o;
    if (!trace.steps.empty()) trace.outcome_step = trace.steps.size() - 1;
  };

  while (true) {
    if (cmp(radius(x), tol) <= 0) {
      finish(Outcome::Converged);
      break;
    }
    if (trace.steps.size() >= max_iter) {
      finish(Outcome::MaxIterations);
      break;
    }
    StepRecord<T> step = enclosure_step(method, f, x, reference_zero);
    step.k = trace.steps.size();
    const StepStatus status = step.status;
    const bool lost = step.inclusion_lost();
    std::optional<Interval<T>> next = step.x_next;
    trace.steps.push_back(std::move(step));

    if (status == StepStatus::ZeroFound) {
      trace.final_interval = *next;
      finish(Outcome::ZeroFound);
      break;
    }
    if (status != StepStatus::Ok) {
      switch (status) {
        case StepStatus::EmptyIntersection: finish(Outcome::EmptyIntersection); break;
        case StepStatus::DegenerateFactor: finish(Outcome::DegenerateFactor); break;
        case StepStatus::DerivativeStraddlesZero: finish(Outcome::DerivativeStraddlesZero); break;
        default: finish(Outcome::PrecisionExhausted); break;
      }
      break;
    }
    if (lost) {
      finish(Outcome::InclusionLost);
      break;
    }
    if (*next == x) {
      // No progress: only possible when float rounding has saturated.
      finish(Outcome::PrecisionExhausted);
      break;
    }
    x = std::move(*next);
    trace.final_interval = x;
  }
  return trace;
}

#define IVLAB_INSTANTIATE_ENCLOSURE(T)                                                                        \
  template bool has_sign_change<T>(const Polynomial&, const Interval<T>&);                                   \
  template Interval<T> newton_operator<T>(const BracketedFunction&, const Interval<T>&, const T&);           \
  template StepRecord<T> moore_newton_step<T>(const BracketedFunction&, const Interval<T>&,                  \
                                              const std::optional<Rational>&);                               \
  template StepRecord<T> kinglike_step<T>(const BracketedFunction&, const Interval<T>&, const Rational&,      \
                                          const std::optional<Rational>&);                                   \
  template StepRecord<T> threepoint_step<T>(const BracketedFunction&, const Interval<T>&, const Rational&,   \
                                            const std::optional<Rational>&);                                 \
  template StepRecord<T> enclosure_step<T>(const MethodSpec&, const BracketedFunction&, const Interval<T>&,  \
                                           const std::optional<Rational>&);                                  \
  template struct EnclosureTrace<T>;                                                                          \
  template EnclosureTrace<T> run_enclosure<T>(const MethodSpec&, const BracketedFunction&, const Interval<T>&, \
                                              const Rational&, std::size_t, const std::optional<Rational>&);

IVLAB_INSTANTIATE_ENCLOSURE(Rational)
IVLAB_INSTANTIATE_ENCLOSURE(BigFloat)

}  // namespace ivlab
