#include "ivlab/lab/figures.hpp"

#include "ivlab/bracket.hpp"
#include "ivlab/enclosure.hpp"
#include "ivlab/error.hpp"

namespace ivlab::lab {

using nlohmann::json;

std::string_view to_string(Figure which) { return which == Figure::Fig1 ? "fig1" : "fig2"; }

Figure parse_figure(std::string_view text) {
  if (text == "1" || text == "fig1") return Figure::Fig1;
  if (text == "2" || text == "fig2") return Figure::Fig2;
  throw Error(ErrorCode::ConfigInvalid, "unknown figure '" + std::string(text) + "' (use 1 or 2)");
}

namespace {

json exact(const Rational& q) { return {{"exact", format_exact(q)}, {"value", to_double(q)}}; }

json interval_json(const Interval<Rational>& x) {
  return {{"lo", exact(x.lo())}, {"hi", exact(x.hi())}};
}

json curve(const Polynomial& p, const Rational& from, const Rational& to, int samples) {
  json xs = json::array();
  json ys = json::array();
  for (int i = 0; i < samples; ++i) {
    const Rational x = from + (to - from) * ratio(i, samples - 1);
    xs.push_back(to_double(x));
    ys.push_back(to_double(p(x)));
  }
  return {{"x", xs}, {"y", ys}};
}

// The line through (at, f_at) with the given slope, sampled at the plot ends,
// plus its zero crossing.
json line(const std::string& label, const Rational& slope, const Rational& at, const Rational& f_at,
          const Rational& from, const Rational& to) {
  auto y = [&](const Rational& x) { return to_double(f_at + slope * (x - at)); };
  return {{"label", label},
          {"slope", exact(slope)},
          {"through", {{"x", exact(at)}, {"y", exact(f_at)}}},
          {"x", {to_double(from), to_double(to)}},
          {"y", {y(from), y(to)}},
          {"crosses_zero_at", exact(Rational(at - f_at / slope))}};
}

json fig1(int samples) {
  const BracketedFunction f = check_bracket(Polynomial::parse("-4, 0, 1"), parse_interval("[1, 4]"));
  const Interval<Rational>& x = f.domain();
  const Rational plot_lo(1, 2);
  const Rational plot_hi(9, 2);
  const Rational m = midpoint(x);
  const Rational fm = f.f()(m);
  const Interval<Rational> slope = derivative_range(f, x);
  const Interval<Rational> n = newton_operator(f, x, m);
  json out;
  out["figure"] = "fig1";
  out["title"] = "Moore-Newton step";
  out["function"] = f.f().to_string();
  out["x"] = interval_json(x);
  out["midpoint"] = exact(m);
  out["f_midpoint"] = exact(fm);
  out["curve"] = curve(f.f(), plot_lo, plot_hi, samples);
  out["slope_lines"] = json::array({line("f'(lo)", slope.lo(), m, fm, plot_lo, plot_hi),
                                    line("f'(hi)", slope.hi(), m, fm, plot_lo, plot_hi)});
  out["candidate"] = interval_json(n);
  out["next"] = interval_json(*intersect(n, x));
  out["zero"] = exact(Rational(2));
  return out;
}

json fig2(int samples) {
  const BracketedFunction f = check_bracket(Polynomial::parse("-12, 0, 1, 1"), parse_interval("[0.5, 2.1]"));
  const Interval<Rational>& x = f.domain();
  const Rational plot_lo(1, 4);
  const Rational plot_hi(3);
  const Rational beta(0);
  const auto r = kinglike_step<Rational>(f, x, beta, Rational(2));
  const Rational mx = midpoint(x);
  const Rational fmx = f.f()(mx);
  const Rational my = midpoint(*r.y);
  const Rational fmy = f.f()(my);
  const Rational t = fmy / fmx;
  // c = (1 + (beta - 2) t) / (1 + beta t); 1 - 2t for beta = 0.
  const Rational c = (1 + (beta - 2) * t) / (1 + beta * t);

  json a;
  a["midpoint"] = exact(mx);
  a["f_midpoint"] = exact(fmx);
  a["slope_lines"] = json::array({line("f'(lo)", r.slope->lo(), mx, fmx, plot_lo, plot_hi),
                                  line("f'(hi)", r.slope->hi(), mx, fmx, plot_lo, plot_hi)});
  a["candidate"] = interval_json(*r.newton);
  a["next"] = interval_json(*r.y);

  json b;
  b["midpoint"] = exact(my);
  b["f_midpoint"] = exact(fmy);
  b["t"] = exact(t);
  b["c"] = exact(c);
  b["slope_lines"] = json::array({line("c f'(lo)", c * r.slope->lo(), my, fmy, plot_lo, plot_hi),
                                  line("c f'(hi)", c * r.slope->hi(), my, fmy, plot_lo, plot_hi)});
  b["candidate"] = interval_json(*r.king);
  b["contains_zero"] = contains(*r.king, Rational(2));

  json out;
  out["figure"] = "fig2";
  out["title"] = "KingLike(0) step";
  out["function"] = f.f().to_string();
  out["x"] = interval_json(x);
  out["beta"] = format_exact(beta);
  out["curve"] = curve(f.f(), plot_lo, plot_hi, samples);
  out["a"] = a;
  out["b"] = b;
  out["zero"] = exact(Rational(2));
  return out;
}

}  // namespace

json figure_data(Figure which, int samples) {
  if (samples < 2) throw Error(ErrorCode::ConfigInvalid, "need at least 2 curve samples");
  return which == Figure::Fig1 ? fig1(samples) : fig2(samples);
}

}  // namespace ivlab::lab
