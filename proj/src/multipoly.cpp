#include "cycrook/multipoly.hpp"

#include <algorithm>
#include <set>

#include "cycrook/errors.hpp"

namespace cycrook {

namespace {

MultiPoly::Monomial multiply(const MultiPoly::Monomial& a, const MultiPoly::Monomial& b) {
  MultiPoly::Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(long c) : MultiPoly(BigInt(c)) {}

MultiPoly::MultiPoly(const BigInt& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::Vars MultiPoly::make_vars(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructuralError("empty indeterminate name");
    if (!seen.insert(n).second) throw StructuralError("duplicate indeterminate '" + n + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly MultiPoly::variable(const Vars& vars, std::string_view name) {
  if (!vars) throw StructuralError("variable requires an indeterminate set");
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw StructuralError("unknown indeterminate '" + std::string(name) + "'");
  MultiPoly p;
  p.vars_ = vars;
  p.terms_.emplace(Monomial{{static_cast<std::uint32_t>(it - vars->begin()), 1u}}, BigInt(1));
  return p;
}

MultiPoly MultiPoly::constant(const Vars& vars, const BigInt& c) {
  MultiPoly p(c);
  p.vars_ = vars;
  return p;
}

std::optional<BigInt> MultiPoly::constant_value() const {
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

MultiPoly::Vars MultiPoly::unify(const Vars& a, const Vars& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw StructuralError("mismatched indeterminate sets");
}

void MultiPoly::add_term(const Monomial& mono, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::evaluate(const std::map<std::string, BigInt>& bindings) const {
  MultiPoly out;
  out.vars_ = vars_;
  if (!vars_) {
    out.terms_ = terms_;
    return out;
  }
  std::vector<const BigInt*> value(vars_->size(), nullptr);
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    auto it = bindings.find((*vars_)[v]);
    if (it != bindings.end()) value[v] = &it->second;
  }
  for (const auto& [mono, c] : terms_) {
    Monomial rest;
    BigInt coeff = c;
    for (const auto& [var, e] : mono) {
      if (value[var]) {
        BigInt f;
        mpz_pow_ui(f.get_mpz_t(), value[var]->get_mpz_t(), e);
        coeff *= f;
      } else {
        rest.emplace_back(var, e);
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  vars_ = unify(vars_, o.vars_);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  vars_ = unify(vars_, o.vars_);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  Vars v = unify(vars_, o.vars_);
  MultiPoly out;
  out.vars_ = v;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(multiply(ma, mb), ca * cb);
  }
  *this = std::move(out);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::unify(a.vars_, b.vars_);
  return a.terms_ == b.terms_;
}

namespace {

std::string monomial_text(const MultiPoly::Monomial& mono, const std::vector<std::string>* names) {
  std::string s;
  for (const auto& [var, e] : mono) {
    if (!s.empty()) s += '*';
    s += names ? (*names)[var] : ("v" + std::to_string(var));
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string MultiPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    BigInt mag = abs(c);
    std::string mono_s = monomial_text(mono, vars_.get());
    std::string body;
    if (mono_s.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono_s;
    } else {
      body = to_string(mag) + "*" + mono_s;
    }
    if (first) {
      out = (sgn(c) < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1L);
  MultiPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

TermText term_text(const MultiPoly& p) {
  if (p.term_count() == 1) {
    bool negative = sgn(p.terms().begin()->second) < 0;
    return TermText{(negative ? -p : p).render(), negative, false};
  }
  return TermText{p.render(), false, p.term_count() > 1};
}

}  // namespace cycrook
