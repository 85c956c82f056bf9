#include "ifscheck/ifs_json.hpp"

#include "ifscheck/errors.hpp"

#include <fstream>

namespace ifscheck {

using nlohmann::json;

namespace {

Rational json_rational(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError("ifs json: " + where + " must be a \"p/q\" string");
  const auto text = v.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InputError("ifs json: " + where + " is not \"p/q\": " + text);
  const auto den = text.substr(slash + 1);
  if (den.empty() || den.front() == '-' || den.front() == '+') {
    throw InputError("ifs json: " + where + " needs a positive denominator: " + text);
  }
  const Rational r = Rational::parse(text);
  return r;
}

}  // namespace

Ifs ifs_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("ifs json: top level must be an object");
  if (!doc.contains("ratio")) throw InputError("ifs json: missing \"ratio\"");
  if (!doc.contains("translations") || !doc["translations"].is_array()) {
    throw InputError("ifs json: missing \"translations\" array");
  }
  const Rational ratio = json_rational(doc["ratio"], "ratio");
  std::vector<RatPoint> translations;
  std::size_t i = 0;
  for (const auto& t : doc["translations"]) {
    ++i;
    if (!t.is_array() || t.size() != 2) {
      throw InputError("ifs json: translation " + std::to_string(i) + " must be a pair");
    }
    const auto where = "translations[" + std::to_string(i - 1) + "]";
    translations.push_back({json_rational(t[0], where), json_rational(t[1], where)});
  }
  RatRect square = RatRect::unit_square();
  if (doc.contains("invariant_square")) {
    const auto& s = doc["invariant_square"];
    if (!s.is_array() || s.size() != 4) throw InputError("ifs json: invariant_square needs 4 entries");
    square = RatRect(json_rational(s[0], "invariant_square"), json_rational(s[1], "invariant_square"),
                     json_rational(s[2], "invariant_square"), json_rational(s[3], "invariant_square"));
    if (square.width() != square.height()) throw InputError("ifs json: invariant_square must be a square");
  }
  return homogeneous_ifs(ratio, translations, square);
}

json ifs_to_json(const Ifs& ifs) {
  const Rational& ratio = ifs.map(1).ratio();
  json translations = json::array();
  for (const auto& m : ifs.maps()) {
    if (m.ratio() != ratio) throw InputError("ifs json: only homogeneous systems are serializable");
    translations.push_back({m.translation().x.to_string(), m.translation().y.to_string()});
  }
  const auto& sq = ifs.invariant_square();
  return json{{"ratio", ratio.to_string()},
              {"translations", translations},
              {"invariant_square",
               {sq.xmin().to_string(), sq.ymin().to_string(), sq.xmax().to_string(), sq.ymax().to_string()}}};
}

Ifs load_ifs(const std::string& name_or_path) {
  if (name_or_path == "paper") return paper_ifs();
  if (name_or_path == "grid") return grid_ifs(6);
  std::ifstream in(name_or_path);
  if (!in) throw InputError("ifs: cannot open \"" + name_or_path + "\" (expected paper, grid or a JSON file)");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("ifs json: " + std::string(e.what()));
  }
  return ifs_from_json(doc);
}

}  // namespace ifscheck
