#include "laakso/family.hpp"

#include "laakso/errors.hpp"

namespace laakso {

std::string to_string(Operator op) {
  switch (op) {
    case Operator::free:
      return "free";
    case Operator::finite:
      return "finite";
    case Operator::plated:
      return "plated";
    case Operator::dirichlet_ends:
      return "dirichlet_ends";
  }
  return "free";
}

namespace {

std::string shifted(const char* base, int shift) {
  std::string out = base;
  if (shift == 0) return out;
  return "(" + out + (shift > 0 ? "+" : "") + std::to_string(shift) + ")";
}

std::string d_index(int shift) {
  if (shift == 0) return "d_n";
  return "d_(n" + std::string(shift > 0 ? "+" : "") + std::to_string(shift) + ")";
}

Rational power_of_two(int e) {
  if (e >= 0) return Rational(pow(BigInt(2), static_cast<unsigned>(e)));
  return Rational(BigInt(1), pow(BigInt(2), static_cast<unsigned>(-e)));
}

}  // namespace

Rational EigenFamily::multiplicity_raw(int n) const {
  Rational total = 0;
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    Rational v = t.coef * power_of_two(n + t.two_shift);
    if (t.d_power != 0) {
      if (n + t.d_shift < 0) {
        throw ValidationError("family " + label + " references d at a negative level");
      }
      v *= pow(Rational(seq.d(n + t.d_shift)), t.d_power);
    }
    if (t.uses_j_minus_2) v *= seq.j(n) - 2;
    total += v;
  }
  return total;
}

BigInt EigenFamily::multiplicity(int n) const {
  const Rational m = multiplicity_raw(n);
  if (m < 0 || !is_integer(m)) {
    throw MultiplicityError(label, n, to_string(m));
  }
  return numerator(m);
}

Rational EigenFamily::unit_scale(int n) const {
  return scale_coef * Rational(seq.d(n + scale_d_shift));
}

Rational EigenFamily::scale(int n) const { return unit_scale(n) / length; }

Rational EigenFamily::hurwitz_a() const {
  Rational a = Rational(k_min) + offset;
  return a == 0 ? Rational(1) : a;
}

std::string EigenFamily::multiplicity_text() const {
  std::string out;
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    std::string term;
    if (t.coef != 1) term = to_string(t.coef);
    const bool level = !single_level();
    if (level || t.two_shift != 0) {
      std::string two = level ? "2^" + shifted("n", t.two_shift)
                              : to_string(power_of_two(n_min + t.two_shift));
      term += (term.empty() ? "" : "*") + two;
    }
    if (t.d_power != 0) {
      term += (term.empty() ? "" : "*") + d_index(t.d_shift);
      if (t.d_power != 1) term += "^" + std::to_string(t.d_power);
    }
    if (t.uses_j_minus_2) term += std::string(term.empty() ? "" : "*") + "(j_n-2)";
    if (term.empty()) term = "1";
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string EigenFamily::scale_text() const {
  std::string out = scale_coef == 1 ? "" : to_string(scale_coef);
  if (!single_level() || scale_d_shift != 0) {
    out += (out.empty() ? "" : "*") + d_index(scale_d_shift);
  }
  if (out.empty()) out = "1";
  if (side == Side::inner) out += "/(2*X0)";
  if (side == Side::outer) out += "/(1-2*X0)";
  return out;
}

namespace {

EigenFamily base(const std::string& label, Operator op, const JSequence& seq) {
  EigenFamily f;
  f.label = label;
  f.op = op;
  f.seq = seq;
  return f;
}

MultiplicityTerm term(Rational coef, int two_shift, int d_shift = 0, int d_power = 0,
                      bool j_minus_2 = false) {
  return MultiplicityTerm{std::move(coef), two_shift, d_shift, d_power, j_minus_2};
}

std::vector<EigenFamily> free_families(const FreeSource& src) {
  const Operator op = src.dirichlet_ends ? Operator::dirichlet_ends
                      : src.max_level    ? Operator::finite
                                         : Operator::free;
  if (src.max_level && *src.max_level < 0) {
    throw ValidationError("level must be >= 0");
  }
  std::vector<EigenFamily> out;

  auto f1 = base("1", op, src.seq);
  f1.n_max = 0;
  f1.k_min = src.dirichlet_ends ? 1 : 0;
  f1.terms = {term(1, 0)};
  out.push_back(f1);

  auto f2 = base("2", op, src.seq);
  f2.n_min = 1;
  f2.n_max = src.max_level;
  f2.offset = src.dirichlet_ends ? Rational(0) : Rational(1, 2);
  f2.k_min = src.dirichlet_ends ? 1 : 0;
  f2.terms = {term(1, 0)};
  out.push_back(f2);

  auto f3 = base("3", op, src.seq);
  f3.n_min = 1;
  f3.n_max = src.max_level;
  f3.k_min = 1;
  f3.terms = {term(1, -1, -1, 1, true)};
  out.push_back(f3);

  auto f4 = base("4", op, src.seq);
  f4.n_min = 2;
  f4.n_max = src.max_level;
  f4.k_min = 1;
  f4.terms = {term(1, -1, -1, 1), term(-1, -1)};
  out.push_back(f4);

  auto f5 = base("5", op, src.seq);
  f5.n_min = 2;
  f5.n_max = src.max_level;
  f5.k_min = 1;
  f5.scale_coef = Rational(1, 2);
  f5.terms = {term(1, -2, -1, 1), term(-1, -2)};
  out.push_back(f5);
  return out;
}

std::vector<EigenFamily> plated_families(const PlatedSource& src) {
  const PlateConfig& cfg = src.cfg;
  const auto valid = plate_config(cfg.j, cfg.Z, cfg.X0);
  const JSequence seq = make_sequence({cfg.j}, 1);
  const Rational j(cfg.j);
  const Rational c(cfg.Z);
  const Rational inner = 2 * valid.X0;
  const Rational outer = 1 - 2 * valid.X0;

  auto single = [&](const std::string& label, Side side, Rational scale, Rational offset,
                    int k_min, Rational mult) {
    auto f = base(label, Operator::plated, seq);
    f.n_max = 0;
    f.side = side;
    f.length = side == Side::inner ? inner : outer;
    f.scale_coef = std::move(scale);
    f.offset = std::move(offset);
    f.k_min = k_min;
    f.terms = {term(std::move(mult), 0)};
    return f;
  };
  auto level = [&](const std::string& label, Side side, Rational scale, Rational offset,
                   int k_min, std::vector<MultiplicityTerm> terms) {
    auto f = base(label, Operator::plated, seq);
    f.n_min = 2;
    f.n_max = src.max_level;
    f.side = side;
    f.length = side == Side::inner ? inner : outer;
    f.scale_coef = std::move(scale);
    f.scale_d_shift = -1;
    f.offset = std::move(offset);
    f.k_min = k_min;
    f.terms = std::move(terms);
    return f;
  };

  std::vector<EigenFamily> out;
  out.push_back(single("1", Side::inner, 1, 0, 1, 1));
  out.push_back(single("2", Side::outer, 2, Rational(1, 2), 0, 2));
  out.push_back(single("3", Side::outer, j - c, Rational(1, 2), 0, 2));
  out.push_back(single("4", Side::outer, j - c, 0, 1, j - c - 2));
  out.push_back(single("5", Side::inner, c, 0, 1, c));
  out.push_back(level("6", Side::outer, j - c, Rational(1, 2), 0, {term(1, 0)}));
  out.push_back(level("7", Side::outer, j - c, 0, 1,
                      {term((j - c) * (j - 2), -1, -2, 1), term(j - c, -1, -2, 1)}));
  out.push_back(level("8", Side::outer, (j - c) / 2, 0, 1, {term(j - c, -2, -2, 1), term(-2, -2)}));
  out.push_back(level("9", Side::inner, c, 0, 1,
                      {term(c * (j - 2), -1, -2, 1), term(c, -1, -2, 1), term(1, -1)}));
  out.push_back(level("10", Side::inner, c / 2, 0, 1, {term(c, -2, -2, 1), term(-1, -2)}));

  for (const auto& f : out) {
    const int last = f.n_max ? std::min(*f.n_max, f.n_min + 2) : f.n_min + 2;
    for (int n = f.n_min; n <= last; ++n) f.multiplicity(n);
  }
  return out;
}

}  // namespace

std::vector<EigenFamily> family_stream(const FamilySource& source) {
  if (const auto* free = std::get_if<FreeSource>(&source)) return free_families(*free);
  return plated_families(std::get<PlatedSource>(source));
}

}  // namespace laakso
