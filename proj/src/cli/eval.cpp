#include "mnring/cli/eval.hpp"

#include <algorithm>

namespace mnr::cli {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::crossed_l: return "crossed-L";
    case Mode::crossed_r: return "crossed-R";
    case Mode::series: return "series";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "crossed-L" || name == "L") return Mode::crossed_l;
  if (name == "crossed-R" || name == "R") return Mode::crossed_r;
  if (name == "series") return Mode::series;
  return std::nullopt;
}

namespace {

// ---- series arithmetic with precision ----

std::optional<GroupElement> min_frontier(const std::optional<GroupElement>& a, const std::optional<GroupElement>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

SeriesValue truncated(SeriesElement body, std::optional<GroupElement> frontier) {
  if (frontier) {
    SeriesElement kept(body.basis());
    for (const auto& [g, c] : body.terms())
      if (g < *frontier) kept.accumulate(g, c);
    body = std::move(kept);
  }
  return {std::move(body), std::move(frontier)};
}

// Least element that can occur in the support; nullopt for an exact zero.
std::optional<GroupElement> valuation(const SeriesValue& v) {
  std::optional<GroupElement> out = v.frontier;
  if (!v.body.is_zero()) out = min_frontier(out, v.body.leading());
  return out;
}

SeriesValue series_sum(const SeriesValue& a, const SeriesValue& b, bool subtract) {
  return truncated(subtract ? a.body - b.body : a.body + b.body, min_frontier(a.frontier, b.frontier));
}

// (A + O(f))(B + O(g)) = AB + O(min(f·val(b), val(a)·g)).
SeriesValue series_product(const SeriesValue& a, const SeriesValue& b) {
  const auto va = valuation(a), vb = valuation(b);
  if (!va || !vb) return {SeriesElement(a.body.basis()), std::nullopt};
  std::optional<GroupElement> frontier;
  if (a.frontier) frontier = min_frontier(frontier, *a.frontier * *vb);
  if (b.frontier) frontier = min_frontier(frontier, *va * *b.frontier);
  return truncated(a.body * b.body, frontier);
}

SeriesValue series_inverse(const SeriesValue& a, const Session& s) {
  if (a.body.is_zero()) {
    if (a.frontier) throw DomainError("cannot invert O(" + to_string(*a.frontier) + "): leading term unknown");
    throw DivisionByZero();
  }
  const GroupElement u = a.body.leading();
  if (a.frontier && !(u < *a.frontier)) throw DomainError("leading term of the operand is not known exactly");
  const TruncatedSeries inv = series_inv(a.body, {s.budget, std::nullopt});
  std::optional<GroupElement> frontier = inv.exact_below;
  // a⁻¹ − A⁻¹ = −A⁻¹(a − A)a⁻¹ starts at u⁻¹·f·u⁻¹.
  if (a.frontier) frontier = min_frontier(frontier, invert(u) * *a.frontier * invert(u));
  return truncated(inv.body, frontier);
}

SeriesValue series_power(const SeriesValue& base, std::int64_t k, const Session& s) {
  SeriesValue b = k < 0 ? series_inverse(base, s) : base;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  SeriesValue result{SeriesElement::one(base.body.basis()), std::nullopt};
  for (; n; n >>= 1) {
    if (n & 1) result = series_product(result, b);
    if (n > 1) b = series_product(b, b);
  }
  return result;
}

// ---- crossed ----

CrossedElement crossed_power(const CrossedElement& base, std::int64_t k) {
  CrossedElement b = k < 0 ? crossed_inv(base) : base;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  CrossedElement result = CrossedElement::scalar(base.basis(), base.with_s(), CentralFraction(1));
  for (; n; n >>= 1) {
    if (n & 1) result = result * b;
    if (n > 1) b = b * b;
  }
  return result;
}

class Evaluator {
 public:
  explicit Evaluator(const Session& s) : s_(s) {}

  Value run(const Expr& e) {
    if (s_.mode == Mode::series) return series(e);
    return crossed(e);
  }

 private:
  CrossedElement crossed(const Expr& e) {
    const BasisPtr& b = s_.basis;
    const bool with_s = s_.with_s();
    switch (e.kind) {
      case Expr::Kind::integer: return CrossedElement::scalar(b, with_s, CentralFraction(Rational(e.value)));
      case Expr::Kind::radical: return CrossedElement::radical(b, with_s, e.index);
      case Expr::Kind::generator: return CrossedElement::generator(b, with_s, e.index);
      case Expr::Kind::central: return CrossedElement::t(b, with_s, e.index);
      case Expr::Kind::alpha:
        if (!with_s) throw ParseError(e.offset, "'a' needs crossed-R or series mode");
        return CrossedElement::alpha(b);
      case Expr::Kind::alpha_tail:
        if (!with_s) throw ParseError(e.offset, "'s' needs crossed-R mode");
        return CrossedElement::s(b);
      case Expr::Kind::add: return crossed(*e.args[0]) + crossed(*e.args[1]);
      case Expr::Kind::sub: return crossed(*e.args[0]) - crossed(*e.args[1]);
      case Expr::Kind::mul: return crossed(*e.args[0]) * crossed(*e.args[1]);
      case Expr::Kind::div: {
        CrossedElement lhs = crossed(*e.args[0]);
        return lhs * crossed_inv(crossed(*e.args[1]));
      }
      case Expr::Kind::neg: return -crossed(*e.args[0]);
      case Expr::Kind::pow: return crossed_power(crossed(*e.args[0]), e.exponent);
    }
    throw std::logic_error("unhandled expression node");
  }

  SeriesValue series(const Expr& e) {
    const BasisPtr& b = s_.basis;
    const auto level = static_cast<GenIndex>(s_.level());
    switch (e.kind) {
      case Expr::Kind::integer:
        return {SeriesElement::constant(FieldElement::scalar(b, Rational(e.value))), std::nullopt};
      case Expr::Kind::radical:
        return {SeriesElement::constant(FieldElement::radical(b, e.index)), std::nullopt};
      case Expr::Kind::generator:
        return {SeriesElement::group(b, GroupElement::generator(static_cast<GenIndex>(e.index))), std::nullopt};
      case Expr::Kind::central:
        return {SeriesElement::group(b, GroupElement::generator(static_cast<GenIndex>(e.index), 2)), std::nullopt};
      case Expr::Kind::alpha: {
        TruncatedSeries t = alpha_prefix(b, level, level);
        return {std::move(t.body), std::move(t.exact_below)};
      }
      case Expr::Kind::alpha_tail: throw ParseError(e.offset, "'s' needs crossed-R mode");
      case Expr::Kind::add: return series_sum(series(*e.args[0]), series(*e.args[1]), false);
      case Expr::Kind::sub: return series_sum(series(*e.args[0]), series(*e.args[1]), true);
      case Expr::Kind::mul: return series_product(series(*e.args[0]), series(*e.args[1]));
      case Expr::Kind::div: {
        SeriesValue lhs = series(*e.args[0]);
        return series_product(lhs, series_inverse(series(*e.args[1]), s_));
      }
      case Expr::Kind::neg: {
        SeriesValue v = series(*e.args[0]);
        return {-v.body, v.frontier};
      }
      case Expr::Kind::pow: return series_power(series(*e.args[0]), e.exponent, s_);
    }
    throw std::logic_error("unhandled expression node");
  }

  const Session& s_;
};

}  // namespace

Value eval(const Expr& e, const Session& session) { return Evaluator(session).run(e); }

Value eval(const std::string& text, const Session& session) {
  return eval(*parse(text, session.level()), session);
}

Value inverse(const Value& v, const Session& session) {
  if (const auto* c = std::get_if<CrossedElement>(&v)) return crossed_inv(*c);
  return series_inverse(std::get<SeriesValue>(v), session);
}

Value multiply(const Value& a, const Value& b) {
  if (const auto* c = std::get_if<CrossedElement>(&a)) return *c * std::get<CrossedElement>(b);
  return series_product(std::get<SeriesValue>(a), std::get<SeriesValue>(b));
}

Value commutator(const Value& a, const Value& b, const Session& session) {
  if (const auto* c = std::get_if<CrossedElement>(&a)) return mnr::commutator(*c, std::get<CrossedElement>(b));
  return multiply(multiply(multiply(a, b), inverse(a, session)), inverse(b, session));
}

std::string to_string(const Value& v) {
  if (const auto* c = std::get_if<CrossedElement>(&v)) return mnr::to_string(*c);
  const auto& s = std::get<SeriesValue>(v);
  if (!s.frontier) return mnr::to_string(s.body);
  if (s.body.is_zero()) return "O(" + mnr::to_string(*s.frontier) + ")";
  return mnr::to_string(s.body) + " + O(" + mnr::to_string(*s.frontier) + ")";
}

}  // namespace mnr::cli
