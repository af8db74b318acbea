#include "tautcalc/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tautcalc {

Json to_json(const TautClass& t) {
  std::vector<std::pair<std::string, std::string>> terms;
  for (const auto& [m, c] : t.terms()) terms.emplace_back(m.to_string(t.presentation()), to_string(c));
  std::sort(terms.begin(), terms.end());
  Json j;
  j["arity"] = t.arity();
  j["terms"] = Json::object();
  for (auto& [k, v] : terms) j["terms"][k] = v;
  return j;
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad integer in monomial");
  return v;
}

Generator parse_generator(const Presentation& p, std::string_view tok) {
  if (tok.empty()) throw std::invalid_argument("empty generator");
  if (tok[0] == 'o') return Generator::o(parse_int(tok.substr(1)));
  if (tok[0] == 'h') {
    auto caret = tok.find('^');
    if (caret == std::string_view::npos) return Generator::h(parse_int(tok.substr(1)), 1);
    return Generator::h(parse_int(tok.substr(1, caret - 1)), parse_int(tok.substr(caret + 1)));
  }
  if ((tok[0] == 't' || tok[0] == 'l') && tok.size() > 3 && tok[1] == '(' && tok.back() == ')') {
    auto inner = tok.substr(2, tok.size() - 3);
    auto comma = inner.rfind(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("bad generator syntax");
    int last = parse_int(inner.substr(comma + 1));
    auto first = inner.substr(0, comma);
    if (tok[0] == 't') return Generator::tau(parse_int(first), last);
    for (std::size_t s = 0; s < p.hodge.size(); ++s)
      if (p.hodge[s].label == first) return Generator::l(static_cast<int>(s), last);
    throw std::invalid_argument("unknown Hodge class label '" + std::string(first) + "'");
  }
  throw std::invalid_argument("bad generator '" + std::string(tok) + "'");
}

}  // namespace

TautClass tautclass_from_json(PresentationPtr p, const Json& j) {
  try {
    TautClass out(p, j.at("arity").get<int>());
    for (const auto& [key, value] : j.at("terms").items()) {
      std::vector<Generator> gens;
      if (key != "1") {
        std::string_view rest = key;
        while (true) {
          auto star = rest.find('*');
          gens.push_back(parse_generator(*p, rest.substr(0, star)));
          if (star == std::string_view::npos) break;
          rest = rest.substr(star + 1);
        }
      }
      Monomial m(gens);
      if (!m.is_normal(*p, out.arity())) throw std::invalid_argument("monomial '" + key + "' is not normal");
      out.add_term(m, parse_rational(value.get<std::string>()));
    }
    return out;
  } catch (const Json::exception& ex) {
    throw std::invalid_argument(std::string("malformed class: ") + ex.what());
  }
}

Json to_json(const HypersurfaceContext& ctx) {
  return Json{{"n", ctx.n()}, {"d", ctx.d()}, {"chi", ctx.chi().get_str()}, {"b_pr", ctx.b_pr().get_str()}};
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.dense()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace tautcalc
