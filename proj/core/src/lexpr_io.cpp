#include <json.hpp>

#include "lperiod/errors.hpp"
#include "lperiod/lexpr.hpp"

namespace lperiod {

namespace {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json repref_to_json(const RepRef& r) {
  return Json{{"label", r.label}, {"dual", r.dual}, {"dim", r.dim}};
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(x + 1);
  return out;
}

Json leaf_to_json(const Leaf& leaf) {
  struct Visitor {
    Json operator()(const RationalLeaf& l) const {
      return Json{{"kind", "rational"}, {"value", rational_to_json(l.value)}};
    }
    Json operator()(const TamagawaLeaf& l) const {
      return Json{{"kind", "tamagawa"}, {"tag", l.tag}, {"s_tag", l.s_tag}};
    }
    Json operator()(const RankinSelbergLeaf& l) const {
      return Json{{"kind", "rankin_selberg"},
                  {"left", repref_to_json(l.left)},
                  {"right", repref_to_json(l.right)},
                  {"s", rational_to_json(l.s)},
                  {"completion", to_string(l.completion)}};
    }
    Json operator()(const EpsilonLeaf& l) const {
      return Json{{"kind", "epsilon"},
                  {"left", repref_to_json(l.left)},
                  {"right", repref_to_json(l.right)},
                  {"s", rational_to_json(l.s)}};
    }
    Json operator()(const JacquetLeaf& l) const {
      return Json{{"kind", "jacquet"}, {"s_tag", l.s_tag}};
    }
    Json operator()(const LocalZetaLeaf& l) const {
      return Json{{"kind", "local_zeta"},
                  {"sigma", one_based(l.sigma)},
                  {"I", one_based(l.subset)},
                  {"s_tag", l.s_tag},
                  {"phi_tag", l.phi_tag}};
    }
  };
  return std::visit(Visitor{}, leaf);
}

Json expr_to_json(const LExpr& e) {
  switch (e.kind()) {
    case LExpr::Kind::zero:
      return Json(0);
    case LExpr::Kind::leaf:
      return Json{{"node", "leaf"}, {"leaf", leaf_to_json(e.as_leaf())}};
    case LExpr::Kind::inverse:
      return Json{{"node", "inverse"}, {"arg", expr_to_json(e.inverse_arg())}};
    case LExpr::Kind::product: {
      Json factors = Json::array();
      for (const LExpr& f : e.children()) factors.push_back(expr_to_json(f));
      return Json{{"node", "product"}, {"factors", std::move(factors)}};
    }
    case LExpr::Kind::sum: {
      Json terms = Json::array();
      for (const LExpr& t : e.children()) terms.push_back(expr_to_json(t));
      return Json{{"node", "sum"}, {"terms", std::move(terms)}};
    }
  }
  return Json(0);
}

// --- Parsing with field paths -------------------------------------------------

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw DomainError("schema", what, path);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) bad(path + "." + key, "missing field");
  return j.at(key);
}

std::int64_t need_int(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

std::string need_str(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_string()) bad(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected {num, den}");
  std::int64_t den = need_int(j, "den", path);
  if (den == 0) bad(path + ".den", "zero denominator");
  return Rational(need_int(j, "num", path), den);
}

RepRef parse_repref(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a representation reference");
  RepRef r;
  r.label = need_str(j, "label", path);
  r.dual = need_str(j, "dual", path);
  r.dim = static_cast<int>(need_int(j, "dim", path));
  if (r.label.empty() || r.dual.empty()) bad(path, "empty label");
  if (r.dim < 1) bad(path + ".dim", "dimension must be positive");
  return r;
}

std::vector<int> parse_zero_based(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of 1-based integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& v = j.at(i);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
      bad(path + "[" + std::to_string(i) + "]", "expected a positive integer");
    out.push_back(static_cast<int>(v.get<std::int64_t>()) - 1);
  }
  return out;
}

Leaf parse_leaf(const Json& j, const std::string& path) {
  std::string kind = need_str(j, "kind", path);
  if (kind == "rational") return RationalLeaf{parse_rational(need(j, "value", path), path + ".value")};
  if (kind == "tamagawa")
    return TamagawaLeaf{need_str(j, "tag", path), need_str(j, "s_tag", path)};
  if (kind == "rankin_selberg")
    return RankinSelbergLeaf(
        parse_repref(need(j, "left", path), path + ".left"),
        parse_repref(need(j, "right", path), path + ".right"),
        parse_rational(need(j, "s", path), path + ".s"),
        completion_from_string(need_str(j, "completion", path)));
  if (kind == "epsilon")
    return EpsilonLeaf(parse_repref(need(j, "left", path), path + ".left"),
                       parse_repref(need(j, "right", path), path + ".right"),
                       parse_rational(need(j, "s", path), path + ".s"));
  if (kind == "jacquet") return JacquetLeaf{need_str(j, "s_tag", path)};
  if (kind == "local_zeta") {
    LocalZetaLeaf l;
    l.sigma = parse_zero_based(need(j, "sigma", path), path + ".sigma");
    l.subset = parse_zero_based(need(j, "I", path), path + ".I");
    l.s_tag = need_str(j, "s_tag", path);
    l.phi_tag = need_str(j, "phi_tag", path);
    return l;
  }
  bad(path + ".kind", "unknown leaf kind '" + kind + "'");
}

LExpr parse_expr(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return LExpr::constant(Rational(j.get<std::int64_t>()));
  if (!j.is_object()) bad(path, "expected an expression node");
  std::string node = need_str(j, "node", path);
  if (node == "leaf") return LExpr::leaf(parse_leaf(need(j, "leaf", path), path + ".leaf"));
  if (node == "inverse") return LExpr::inverse(parse_expr(need(j, "arg", path), path + ".arg"));
  if (node == "product" || node == "sum") {
    const char* key = node == "product" ? "factors" : "terms";
    const Json& arr = need(j, key, path);
    if (!arr.is_array()) bad(path + "." + key, "expected an array");
    std::vector<LExpr> children;
    children.reserve(arr.size());
    for (size_t i = 0; i < arr.size(); ++i)
      children.push_back(parse_expr(arr.at(i), path + "." + key + "[" + std::to_string(i) + "]"));
    return node == "product" ? LExpr::product(std::move(children))
                             : LExpr::sum(std::move(children));
  }
  bad(path + ".node", "unknown node kind '" + node + "'");
}

}  // namespace

std::string expr_to_json_text(const LExpr& e) { return expr_to_json(e).dump(); }

LExpr expr_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError("schema", std::string("invalid JSON: ") + ex.what(), "$");
  }
  return parse_expr(j, "$");
}

// --- LaTeX ---------------------------------------------------------------------

namespace {

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': out += "\\_"; break;
      case '%': out += "\\%"; break;
      case '&': out += "\\&"; break;
      case '#': out += "\\#"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '\\': break;
      default: out += c;
    }
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return std::to_string(r.num());
  if (r.num() < 0) return "-\\tfrac{" + std::to_string(-r.num()) + "}{" + std::to_string(r.den()) + "}";
  return "\\tfrac{" + std::to_string(r.num()) + "}{" + std::to_string(r.den()) + "}";
}

std::string latex_pi(const RepRef& r) { return "\\pi_{" + latex_escape(r.label) + "}"; }

std::string latex_subset(const std::vector<int>& subset) {
  if (subset.empty()) return "\\varnothing";
  std::string out = "\\{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i] + 1);
  }
  return out + "\\}";
}

std::string latex_leaf(const Leaf& leaf) {
  struct Visitor {
    std::string operator()(const RationalLeaf& l) const { return latex_rational(l.value); }
    std::string operator()(const TamagawaLeaf& l) const {
      std::string base = l.tag == "Delta_H" ? std::string("\\Delta_{H}")
                                            : "\\mathrm{" + latex_escape(l.tag) + "}";
      std::string sup = l.s_tag.empty() ? "*" : latex_escape(l.s_tag) + ",*";
      return base + "^{" + sup + "}";
    }
    std::string operator()(const RankinSelbergLeaf& l) const {
      std::string symbol = "L";
      if (l.completion == Completion::partial_s) symbol = "L^{S}";
      if (l.completion == Completion::local_s) symbol = "L_{S}";
      return symbol + "(" + latex_rational(l.s) + ", " + latex_pi(l.left) + " \\times " +
             latex_pi(l.right) + ")";
    }
    std::string operator()(const EpsilonLeaf& l) const {
      return "\\varepsilon(" + latex_rational(l.s) + ", " + latex_pi(l.left) + " \\times " +
             latex_pi(l.right) + ")";
    }
    std::string operator()(const JacquetLeaf& l) const {
      std::string s = latex_escape(l.s_tag);
      return "\\Omega_{" + s + "}\\left(W^{M_P}_{\\varphi," + s + "}\\right)";
    }
    std::string operator()(const LocalZetaLeaf& l) const {
      std::string s = latex_escape(l.s_tag);
      std::string arg;
      if (!l.phi_tag.empty()) arg += "\\Phi_{" + s + "},\\, ";
      arg += "\\Omega^{M_{Q_n}}_{" + s + "}\\left(N_{\\pi," + s + "}(\\sigma_{" +
             latex_subset(l.subset) + "})\\, W^{M_P}_{\\varphi," + s + "}\\right)";
      return "Z_{" + s + "}\\left(0,\\, " + arg + "\\right)";
    }
  };
  return std::visit(Visitor{}, leaf);
}

std::string latex_expr(const LExpr& e) {
  switch (e.kind()) {
    case LExpr::Kind::zero:
      return "0";
    case LExpr::Kind::leaf:
      return latex_leaf(e.as_leaf());
    case LExpr::Kind::inverse: {
      const LExpr& arg = e.inverse_arg();
      // Brace-group a leaf so its own superscripts do not collide with ^{-1}.
      if (arg.kind() == LExpr::Kind::leaf) return "{" + latex_leaf(arg.as_leaf()) + "}^{-1}";
      return "\\left(" + latex_expr(arg) + "\\right)^{-1}";
    }
    case LExpr::Kind::product: {
      std::string out;
      for (const LExpr& f : e.children()) {
        if (!out.empty()) out += " \\, ";
        if (f.kind() == LExpr::Kind::sum)
          out += "\\left(" + latex_expr(f) + "\\right)";
        else
          out += latex_expr(f);
      }
      return out;
    }
    case LExpr::Kind::sum: {
      std::string out;
      for (const LExpr& t : e.children()) {
        if (!out.empty()) out += " + ";
        out += latex_expr(t);
      }
      return out;
    }
  }
  return "0";
}

}  // namespace

std::string expr_to_latex(const LExpr& e) { return latex_expr(e); }

}  // namespace lperiod
