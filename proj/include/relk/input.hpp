#pragma once

/**
 * @file input.hpp
 * @brief Text documents describing rings, extensions and covers.
 *
 * @code
 * # dual numbers over F_2
 * [ring F2e]
 * kind = algebra
 * modulus = 2
 * basis = 1, e
 * mul e e = 0
 *
 * [extension dual-f2]
 * source = F2
 * target = F2e
 * map 1 = 1
 *
 * [cover trivial]
 * ring = F2
 * elements = 1
 * @endcode
 *
 * Ring kinds: integers-mod, prime-field, rationals, algebra, monogenic,
 * dual, product. Algebras take `modulus = n` or `base = Q`, `basis`,
 * optional `rank`, `orders`, `unit`, and `mul a b = expr` lines (missing
 * products are 0, a missing `mul b a` mirrors `mul a b`). Monogenic rings
 * take `poly = x^2 + x + 1` and optional `var`. Products take
 * `factors = R1, R2, ...` and suffix labels with the factor index.
 *
 * The names Q, Z/n and F<p> refer to the obvious rings unless defined.
 * Expressions are sums of terms `c`, `label` or `c*label` with integer
 * (or, over Q, fractional) c. Every error carries the offending line.
 */

#include "relk/cech.hpp"
#include "relk/rings.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <variant>

namespace relk {

class InputError : public Error {
 public:
  InputError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using AnyRing = std::variant<RingPtr<ModularBase>, RingPtr<RationalBase>>;
using AnyExtension = std::variant<std::shared_ptr<const ModExtension>, std::shared_ptr<const QExtension>>;

struct CoverSpec {
  std::string name;
  std::string ring;
  Cover cover;
};

struct Document {
  std::map<std::string, AnyRing> rings;
  std::map<std::string, AnyExtension> extensions;
  std::map<std::string, CoverSpec> covers;
  std::vector<std::string> extension_order;
  std::vector<std::string> cover_order;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) out.push_back(trim(cur)), cur.clear();
    else cur += c;
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

inline bool is_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t slash = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (++slash > 1 || i == 0 || i + 1 == s.size()) return false;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

inline std::int64_t parse_int(const std::string& s) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("expected a non-negative integer, got '" + s + "'");
  return std::stoll(s);
}

template <class Base>
typename Base::Coeff parse_coeff(const std::string& s) {
  if (!is_number(s)) throw Error("bad coefficient '" + s + "'");
  const auto slash = s.find('/');
  if constexpr (Base::finite) {
    if (slash != std::string::npos) throw Error("fractions need a rational base ('" + s + "')");
    const std::int64_t v = parse_int(s);
    if (v >= (std::int64_t{1} << 31)) throw Error("coefficient '" + s + "' is too large");
    return v;
  } else {
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(Integer(s.substr(0, slash)), den);
  }
}

inline bool valid_label(const std::string& l) {
  if (l.empty()) return false;
  for (char c : l)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '\'')) return false;
  return true;
}

/// Splits "a - 2*b + c" into signed terms.
inline std::vector<std::pair<bool, std::string>> signed_terms(const std::string& text) {
  std::vector<std::pair<bool, std::string>> out;
  std::string cur;
  bool neg = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '+' || c == '-') {
      if (!cur.empty()) out.emplace_back(neg, cur), cur.clear();
      else if (!out.empty() || neg) throw Error("dangling sign in '" + text + "'");
      neg = c == '-';
    } else {
      cur += c;
    }
  }
  if (cur.empty()) throw Error("empty expression '" + text + "'");
  out.emplace_back(neg, cur);
  return out;
}

template <class Base>
std::vector<typename Base::Coeff> parse_vector(const std::vector<std::string>& labels,
                                               const std::vector<typename Base::Coeff>& one, const std::string& text) {
  using Coeff = typename Base::Coeff;
  std::vector<Coeff> v(labels.size(), Coeff(0));
  for (const auto& [neg, term] : signed_terms(text)) {
    Coeff c = 1;
    std::string label = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      c = parse_coeff<Base>(term.substr(0, star));
      label = term.substr(star + 1);
    } else if (is_number(term)) {
      c = parse_coeff<Base>(term);
      label.clear();
    }
    if (neg) c = -c;
    if (label.empty() || (is_number(label) && std::find(labels.begin(), labels.end(), label) == labels.end())) {
      if (!label.empty()) c *= parse_coeff<Base>(label);
      if (one.empty()) throw Error("scalar term '" + term + "' needs the unit to be known");
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * one[i];
      continue;
    }
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error("unknown basis label '" + label + "'");
    v[static_cast<std::size_t>(it - labels.begin())] += c;
  }
  return v;
}

}  // namespace detail

/// Parses an expression over the basis labels of r, e.g. "1 + e" or "2*x^2".
template <class Base>
Element<Base> parse_element(const RingPtr<Base>& r, const std::string& text) {
  return r->element(detail::parse_vector<Base>(r->labels(), r->presentation().one, text));
}

namespace detail {

struct Section {
  std::string type, name;
  std::size_t line = 0;
  std::vector<std::pair<std::string, std::string>> keys;  // key -> value
  std::map<std::string, std::size_t> key_lines;
  std::vector<std::tuple<std::size_t, std::string, std::string, std::string>> muls;  // line, a, b, expr
  std::vector<std::tuple<std::size_t, std::string, std::string>> maps;              // line, label, expr

  const std::string* get(const std::string& k) const {
    for (const auto& [key, v] : keys)
      if (key == k) return &v;
    return nullptr;
  }
  std::size_t line_of(const std::string& k) const {
    auto it = key_lines.find(k);
    return it == key_lines.end() ? line : it->second;
  }
  std::string require(const std::string& k) const {
    if (auto v = get(k)) return *v;
    throw InputError(line, type + " " + name + ": missing key '" + k + "'");
  }
};

inline std::vector<Section> split_sections(std::istream& in) {
  std::vector<Section> out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError(n, "unterminated section header");
      auto parts = split_list(trim(line.substr(1, line.size() - 2)), ' ');
      parts.erase(std::remove(parts.begin(), parts.end(), std::string{}), parts.end());
      if (parts.size() != 2) throw InputError(n, "section header must be [ring|extension|cover <name>]");
      if (parts[0] != "ring" && parts[0] != "extension" && parts[0] != "cover")
        throw InputError(n, "unknown section type '" + parts[0] + "'");
      out.push_back(Section{parts[0], parts[1], n, {}, {}, {}, {}});
      continue;
    }
    if (out.empty()) throw InputError(n, "content before the first section header");
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(n, "expected 'key = value'");
    const std::string lhs = trim(line.substr(0, eq)), rhs = trim(line.substr(eq + 1));
    auto words = split_list(lhs, ' ');
    words.erase(std::remove(words.begin(), words.end(), std::string{}), words.end());
    Section& s = out.back();
    if (!words.empty() && words[0] == "mul") {
      if (s.type != "ring" || words.size() != 3) throw InputError(n, "expected 'mul <a> <b> = <expr>' in a ring section");
      s.muls.emplace_back(n, words[1], words[2], rhs);
    } else if (!words.empty() && words[0] == "map") {
      if (s.type != "extension" || words.size() != 2) throw InputError(n, "expected 'map <label> = <expr>' in an extension section");
      s.maps.emplace_back(n, words[1], rhs);
    } else {
      if (words.size() != 1) throw InputError(n, "malformed key '" + lhs + "'");
      if (s.get(words[0])) throw InputError(n, "duplicate key '" + words[0] + "'");
      s.keys.emplace_back(words[0], rhs);
      s.key_lines[words[0]] = n;
    }
  }
  return out;
}

inline void allow_keys(const Section& s, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : s.keys) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw InputError(s.line_of(k), s.type + " " + s.name + ": unknown key '" + k + "'");
  }
}

template <class Base>
RingPtr<Base> build_algebra(const Section& s, std::int64_t modulus) {
  using Coeff = typename Base::Coeff;
  typename Ring<Base>::Presentation p;
  p.name = s.name;
  p.kind = RingKind::Algebra;
  if (auto b = s.get("basis")) {
    p.labels = split_list(*b);
  } else {
    const std::size_t r = static_cast<std::size_t>(parse_int(s.require("rank")));
    for (std::size_t i = 0; i < r; ++i) p.labels.push_back("b" + std::to_string(i));
  }
  const std::size_t r = p.labels.size();
  if (r == 0) throw InputError(s.line_of("basis"), "ring " + s.name + ": empty basis");
  for (std::size_t i = 0; i < r; ++i) {
    if (!valid_label(p.labels[i])) throw InputError(s.line_of("basis"), "ring " + s.name + ": bad basis label '" + p.labels[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (p.labels[i] == p.labels[j]) throw InputError(s.line_of("basis"), "ring " + s.name + ": repeated label '" + p.labels[i] + "'");
  }
  if (auto rk = s.get("rank"); rk && static_cast<std::size_t>(parse_int(*rk)) != r)
    throw InputError(s.line_of("rank"), "ring " + s.name + ": rank " + *rk + " but " + std::to_string(r) + " basis labels");
  if constexpr (Base::finite) {
    if (auto o = s.get("orders")) {
      for (const auto& d : split_list(*o)) p.orders.push_back(parse_int(d));
      if (p.orders.size() != r) throw InputError(s.line_of("orders"), "ring " + s.name + ": one order per basis label required");
    } else {
      p.orders.assign(r, modulus);
    }
  }
  auto label_index = [&](const std::string& l, std::size_t line) {
    auto it = std::find(p.labels.begin(), p.labels.end(), l);
    if (it == p.labels.end()) throw InputError(line, "ring " + s.name + ": unknown basis label '" + l + "'");
    return static_cast<std::size_t>(it - p.labels.begin());
  };
  try {
    if (auto u = s.get("unit")) {
      p.one = parse_vector<Base>(p.labels, {}, *u);
    } else {
      p.one.assign(r, Coeff(0));
      auto it = std::find(p.labels.begin(), p.labels.end(), "1");
      p.one[it == p.labels.end() ? 0 : static_cast<std::size_t>(it - p.labels.begin())] = 1;
    }
  } catch (const InputError&) {
    throw;
  } catch (const Error& ex) {
    throw InputError(s.line_of("unit"), "ring " + s.name + ": " + ex.what());
  }
  p.products.assign(r * r, std::vector<Coeff>(r, Coeff(0)));
  std::vector<bool> given(r * r, false);
  // the unit law fixes products with the unit when it is a basis element
  for (std::size_t u = 0; u < r; ++u) {
    bool is_unit_basis = p.one[u] == 1;
    for (std::size_t k = 0; k < r; ++k) is_unit_basis = is_unit_basis && (k == u || p.one[k] == 0);
    if (!is_unit_basis) continue;
    for (std::size_t i = 0; i < r; ++i) p.products[u * r + i][i] = p.products[i * r + u][i] = 1;
  }
  for (const auto& [line, a, b, expr] : s.muls) {
    const std::size_t i = label_index(a, line), j = label_index(b, line);
    if (given[i * r + j]) throw InputError(line, "ring " + s.name + ": product " + a + "*" + b + " given twice");
    try {
      p.products[i * r + j] = parse_vector<Base>(p.labels, p.one, expr);
    } catch (const Error& ex) {
      throw InputError(line, "ring " + s.name + ": " + ex.what());
    }
    given[i * r + j] = true;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (given[i * r + j] && !given[j * r + i]) p.products[j * r + i] = p.products[i * r + j];
  try {
    return Ring<Base>::create(std::move(p));
  } catch (const Error& ex) {
    throw InputError(s.line, ex.what());
  }
}

template <class Base>
RingPtr<Base> build_monogenic(const Section& s, std::int64_t modulus) {
  using Coeff = typename Base::Coeff;
  const std::string var = s.get("var") ? *s.get("var") : "x";
  const std::string poly = s.require("poly");
  std::map<std::size_t, Coeff> coeff;
  try {
    for (const auto& [neg, term] : signed_terms(poly)) {
      Coeff c = 1;
      std::string mono = term;
      if (auto star = term.find('*'); star != std::string::npos) {
        c = parse_coeff<Base>(term.substr(0, star));
        mono = term.substr(star + 1);
      }
      std::size_t deg = 0;
      if (is_number(mono)) {
        c *= parse_coeff<Base>(mono);
      } else if (mono == var) {
        deg = 1;
      } else if (mono.rfind(var + "^", 0) == 0) {
        deg = static_cast<std::size_t>(parse_int(mono.substr(var.size() + 1)));
      } else {
        throw Error("bad monomial '" + mono + "'");
      }
      coeff[deg] += neg ? Coeff(-c) : c;
    }
  } catch (const Error& ex) {
    throw InputError(s.line_of("poly"), "ring " + s.name + ": " + ex.what());
  }
  const std::size_t k = coeff.empty() ? 0 : coeff.rbegin()->first;
  Coeff lead = coeff.empty() ? Coeff(0) : coeff.rbegin()->second;
  if constexpr (Base::finite) lead = mod_floor(lead, modulus);
  if (k == 0 || lead != 1) throw InputError(s.line_of("poly"), "ring " + s.name + ": polynomial must be monic of positive degree");
  std::vector<Coeff> lower(k, Coeff(0));
  for (const auto& [d, c] : coeff)
    if (d < k) lower[d] = c;
  try {
    return monogenic<Base>(s.name, modulus, lower, var);
  } catch (const Error& ex) {
    throw InputError(s.line, ex.what());
  }
}

class Builder {
 public:
  Document doc;

  AnyRing ring(const std::string& name, std::size_t line) {
    if (auto it = doc.rings.find(name); it != doc.rings.end()) return it->second;
    AnyRing r;
    if (name == "Q") {
      r = rationals("Q");
    } else if (name.rfind("Z/", 0) == 0 && name.size() > 2 && detail::is_number(name.substr(2))) {
      r = integers_mod(parse_int(name.substr(2)), name);
    } else if (name.size() > 1 && name[0] == 'F' && is_number(name.substr(1)) && is_prime(parse_int(name.substr(1)))) {
      r = prime_field(parse_int(name.substr(1)), name);
    } else {
      throw InputError(line, "unknown ring '" + name + "'");
    }
    doc.rings.emplace(name, r);
    return r;
  }

  void add_ring(const Section& s) {
    if (doc.rings.count(s.name)) throw InputError(s.line, "ring " + s.name + " defined twice");
    const std::string kind = s.require("kind");
    std::int64_t modulus = 0;
    const bool rational = s.get("base") && *s.get("base") == "Q";
    if (auto b = s.get("base"); b && *b != "Q")
      throw InputError(s.line_of("base"), "ring " + s.name + ": base must be Q (use modulus for finite rings)");
    if (auto m = s.get("modulus") ? s.get("modulus") : s.get("characteristic")) {
      const std::string key = s.get("modulus") ? "modulus" : "characteristic";
      try {
        modulus = parse_int(*m);
      } catch (const Error& ex) {
        throw InputError(s.line_of(key), "ring " + s.name + ": " + ex.what());
      }
      if (rational) throw InputError(s.line_of(key), "ring " + s.name + ": modulus given for a rational base");
      if (modulus < 2 || modulus >= (std::int64_t{1} << 31))
        throw InputError(s.line_of(key), "ring " + s.name + ": modulus must lie in [2, 2^31)");
    }
    auto need_modulus = [&] {
      if (!rational && modulus == 0) throw InputError(s.line, "ring " + s.name + ": missing key 'modulus' (or base = Q)");
    };
    AnyRing r;
    try {
      if (kind == "integers-mod") {
        allow_keys(s, {"kind", "modulus", "characteristic"});
        need_modulus();
        r = integers_mod(modulus, s.name);
      } else if (kind == "prime-field") {
        allow_keys(s, {"kind", "modulus", "characteristic"});
        need_modulus();
        r = prime_field(modulus, s.name);
      } else if (kind == "rationals") {
        allow_keys(s, {"kind"});
        r = rationals(s.name);
      } else if (kind == "algebra") {
        allow_keys(s, {"kind", "modulus", "characteristic", "base", "rank", "basis", "orders", "unit"});
        need_modulus();
        if (rational) r = build_algebra<RationalBase>(s, 0);
        else r = build_algebra<ModularBase>(s, modulus);
      } else if (kind == "monogenic") {
        allow_keys(s, {"kind", "modulus", "characteristic", "base", "poly", "var"});
        need_modulus();
        if (rational) r = build_monogenic<RationalBase>(s, 0);
        else r = build_monogenic<ModularBase>(s, modulus);
      } else if (kind == "dual") {
        allow_keys(s, {"kind", "modulus", "characteristic", "base"});
        need_modulus();
        if (rational) r = dual_numbers<RationalBase>(s.name);
        else r = dual_numbers<ModularBase>(s.name, modulus);
      } else if (kind == "product") {
        allow_keys(s, {"kind", "factors"});
        r = build_product(s);
      } else {
        throw InputError(s.line_of("kind"), "ring " + s.name + ": unknown kind '" + kind + "'");
      }
    } catch (const InputError&) {
      throw;
    } catch (const Error& ex) {
      throw InputError(s.line, "ring " + s.name + ": " + ex.what());
    }
    if (!s.muls.empty() && kind != "algebra")
      throw InputError(std::get<0>(s.muls.front()), "ring " + s.name + ": mul lines are only allowed for kind = algebra");
    doc.rings.emplace(s.name, r);
  }

  void add_extension(const Section& s) {
    if (doc.extensions.count(s.name)) throw InputError(s.line, "extension " + s.name + " defined twice");
    allow_keys(s, {"source", "target"});
    AnyRing src = ring(s.require("source"), s.line_of("source"));
    AnyRing dst = ring(s.require("target"), s.line_of("target"));
    if (src.index() != dst.index()) throw InputError(s.line, "extension " + s.name + ": source and target have different bases");
    if (src.index() == 0) {
      doc.extensions.emplace(s.name, make_extension<ModularBase>(s, std::get<0>(src), std::get<0>(dst)));
    } else {
      doc.extensions.emplace(s.name, make_extension<RationalBase>(s, std::get<1>(src), std::get<1>(dst)));
    }
    doc.extension_order.push_back(s.name);
  }

  void add_cover(const Section& s) {
    if (doc.covers.count(s.name)) throw InputError(s.line, "cover " + s.name + " defined twice");
    allow_keys(s, {"ring", "elements"});
    const std::string rname = s.require("ring");
    AnyRing r = ring(rname, s.line_of("ring"));
    if (r.index() != 0) throw InputError(s.line_of("ring"), "cover " + s.name + ": covers need a finite ring");
    const auto& fr = std::get<0>(r);
    std::vector<ModElement> elems;
    try {
      for (const auto& x : split_list(s.require("elements"))) elems.push_back(parse_element(fr, x));
      doc.covers.emplace(s.name, CoverSpec{s.name, rname, make_cover(fr, elems)});
    } catch (const Error& ex) {
      throw InputError(s.line_of("elements"), "cover " + s.name + ": " + ex.what());
    }
    doc.cover_order.push_back(s.name);
  }

 private:
  AnyRing build_product(const Section& s) {
    const auto names = split_list(s.require("factors"));
    if (names.empty()) throw InputError(s.line_of("factors"), "ring " + s.name + ": no factors");
    std::vector<AnyRing> fs;
    for (const auto& n : names) fs.push_back(ring(n, s.line_of("factors")));
    for (const auto& f : fs)
      if (f.index() != fs[0].index()) throw InputError(s.line_of("factors"), "ring " + s.name + ": factors have different bases");
    if (fs[0].index() == 0) {
      std::vector<RingPtr<ModularBase>> v;
      for (const auto& f : fs) v.push_back(std::get<0>(f));
      return product<ModularBase>(s.name, v);
    }
    std::vector<RingPtr<RationalBase>> v;
    for (const auto& f : fs) v.push_back(std::get<1>(f));
    return product<RationalBase>(s.name, v);
  }

  template <class Base>
  std::shared_ptr<const Extension<Base>> make_extension(const Section& s, const RingPtr<Base>& src, const RingPtr<Base>& dst) {
    std::vector<std::optional<Element<Base>>> images(src->rank());
    for (const auto& [line, label, expr] : s.maps) {
      auto it = std::find(src->labels().begin(), src->labels().end(), label);
      if (it == src->labels().end()) throw InputError(line, "extension " + s.name + ": unknown source label '" + label + "'");
      auto& slot = images[static_cast<std::size_t>(it - src->labels().begin())];
      if (slot) throw InputError(line, "extension " + s.name + ": image of '" + label + "' given twice");
      try {
        slot = parse_element(dst, expr);
      } catch (const Error& ex) {
        throw InputError(line, "extension " + s.name + ": " + ex.what());
      }
    }
    try {
      std::optional<RingMap<Base>> f;
      if (s.maps.empty() && src == dst) {
        f = RingMap<Base>::identity(src);
      } else if (s.maps.empty() && src->rank() == 1) {
        f = structure_map(src, dst);
      } else {
        std::vector<Element<Base>> ims;
        for (std::size_t i = 0; i < images.size(); ++i) {
          if (!images[i]) throw InputError(s.line, "extension " + s.name + ": no image for '" + src->labels()[i] + "'");
          ims.push_back(*images[i]);
        }
        f.emplace(src, dst, std::move(ims));
      }
      return std::make_shared<const Extension<Base>>(s.name, *f);
    } catch (const InputError&) {
      throw;
    } catch (const NotFaithful& ex) {
      throw InputError(s.line, std::string("extension ") + ex.what());
    } catch (const Error& ex) {
      throw InputError(s.line, "extension " + s.name + ": " + ex.what());
    }
  }
};

}  // namespace detail

inline Document parse_input(std::istream& in) {
  detail::Builder b;
  for (const auto& s : detail::split_sections(in)) {
    if (s.type == "ring") b.add_ring(s);
    else if (s.type == "extension") b.add_extension(s);
    else b.add_cover(s);
  }
  return std::move(b.doc);
}

inline Document parse_input(const std::string& text) {
  std::istringstream in(text);
  return parse_input(in);
}

inline Document parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(0, "cannot open '" + path + "'");
  return parse_input(in);
}

/// A ring defined in the document, or one of the built-in names Q, Z/n, F<p>.
inline AnyRing resolve_ring(const Document& doc, const std::string& name) {
  detail::Builder b;
  b.doc.rings = doc.rings;
  return b.ring(name, 0);
}

}  // namespace relk
