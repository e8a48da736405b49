#include "casson/io.hpp"

#include <fstream>

namespace casson::io {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer())
    return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ValidationError(what + ": '" + j.get<std::string>() +
                            "' is not an integer");
    }
  }
  throw ValidationError(what + ": expected an integer (number or decimal "
                               "string), got " + j.dump());
}

json vector_to_json(const HomologyVector& v) {
  json out = json::array();
  for (long i = 0; i < v.coords().size(); ++i)
    out.push_back(int_to_json(v[i]));
  return out;
}

HomologyVector vector_from_json(int genus, const json& j,
                                const std::string& what) {
  if (!j.is_array())
    throw ValidationError(what + ": expected an array of integers");
  if (static_cast<long>(j.size()) != 2L * genus)
    throw ValidationError(what + ": expected " + std::to_string(2 * genus) +
                          " coordinates for genus " + std::to_string(genus) +
                          ", got " + std::to_string(j.size()));
  IntVec coords(2L * genus);
  for (std::size_t i = 0; i < j.size(); ++i)
    coords(static_cast<long>(i)) =
        int_from_json(j[i], what + "[" + std::to_string(i) + "]");
  return HomologyVector(genus, std::move(coords));
}

json matrix_to_json(const IntMat& m) {
  json out = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j2 = 0; j2 < m.cols(); ++j2) row.push_back(int_to_json(m(i, j2)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMat matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw ValidationError(what + ": expected a non-empty array of rows");
  const long rows = static_cast<long>(j.size());
  if (!j[0].is_array())
    throw ValidationError(what + ": expected rows to be arrays");
  const long cols = static_cast<long>(j[0].size());
  IntMat m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      throw ValidationError(what + ": row " + std::to_string(r) +
                            " has the wrong length");
    for (long c = 0; c < cols; ++c)
      m(r, c) = int_from_json(row[static_cast<std::size_t>(c)],
                              what + "[" + std::to_string(r) + "][" +
                                  std::to_string(c) + "]");
  }
  return m;
}

json cube_to_json(const ExteriorCubeVector& v) {
  json out = json::array();
  for (const auto& [t, c] : v.coeffs()) {
    json term;
    term["triple"] = json::array({t[0], t[1], t[2]});
    term["coeff"] = int_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

ExteriorCubeVector cube_from_json(int genus, const json& j,
                                  const std::string& what) {
  if (!j.is_array())
    throw ValidationError(what + ": expected a list of {triple, coeff} terms");
  std::map<Triple, Int> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& term = j[i];
    const std::string at = what + "[" + std::to_string(i) + "]";
    if (!term.is_object() || !term.contains("triple") ||
        !term.contains("coeff"))
      throw ValidationError(at + ": expected {\"triple\":[i,j,k],\"coeff\":n}");
    const json& tj = term["triple"];
    if (!tj.is_array() || tj.size() != 3)
      throw ValidationError(at + ": triple must have three indices");
    Triple t;
    for (int p = 0; p < 3; ++p) {
      if (!tj[static_cast<std::size_t>(p)].is_number_integer())
        throw ValidationError(at + ": triple indices must be integers");
      t[p] = tj[static_cast<std::size_t>(p)].get<int>();
    }
    if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < 2 * genus))
      throw ValidationError(at + ": triple is not strictly increasing in "
                                 "range for genus " + std::to_string(genus));
    coeffs[t] += int_from_json(term["coeff"], at + ".coeff");
  }
  return ExteriorCubeVector(genus, std::move(coeffs));
}

namespace {

json factor_to_json(const TwistGenerator& f) {
  json out;
  switch (f.kind()) {
    case TwistGenerator::Kind::general:
      out["type"] = "general";
      out["c"] = vector_to_json(f.general().c);
      out["power"] = int_to_json(f.general().power);
      return out;
    case TwistGenerator::Kind::separating:
      out["type"] = "sep";
      out["power"] = int_to_json(f.separating().power);
      if (f.separating().f_value)
        out["F"] = int_to_json(*f.separating().f_value);
      return out;
    case TwistGenerator::Kind::bounding_pair: {
      const BoundingPairTwist& b = f.bounding_pair();
      out["type"] = "bp";
      json spine = json::array();
      for (const SpinePair& p : b.spine()) {
        json pair_json;
        pair_json["x"] = vector_to_json(p.x);
        pair_json["y"] = vector_to_json(p.y);
        spine.push_back(std::move(pair_json));
      }
      out["spine"] = std::move(spine);
      out["c"] = vector_to_json(b.c());
      out["power"] = int_to_json(b.power());
      return out;
    }
    case TwistGenerator::Kind::conjugated:
      out["type"] = "conj";
      out["by"] = matrix_to_json(f.conjugated().by.entries());
      out["inner"] = factor_to_json(*f.conjugated().inner);
      return out;
  }
  throw InternalError("unreachable");
}

TwistGenerator factor_from_json(int genus, const json& j,
                                const std::string& at) {
  if (!j.is_object() || !j.contains("type"))
    throw ValidationError(at + ": expected a factor object with a type");
  const std::string type = j["type"].get<std::string>();
  if (type == "general") {
    if (!j.contains("c") || !j.contains("power"))
      throw ValidationError(at + ": general factor needs c and power");
    return TwistGenerator(
        GeneralTwist{vector_from_json(genus, j["c"], at + ".c"),
                     int_from_json(j["power"], at + ".power")});
  }
  if (type == "sep") {
    if (!j.contains("power"))
      throw ValidationError(at + ": separating factor needs a power");
    SeparatingTwist s{genus, int_from_json(j["power"], at + ".power"),
                      std::nullopt};
    if (j.contains("F")) s.f_value = int_from_json(j["F"], at + ".F");
    return TwistGenerator(std::move(s));
  }
  if (type == "bp") {
    if (!j.contains("spine") || !j.contains("c") || !j.contains("power"))
      throw ValidationError(at + ": bounding-pair factor needs spine, c, "
                                 "power");
    if (!j["spine"].is_array() || j["spine"].empty())
      throw ValidationError(at + ": spine must be a non-empty list");
    std::vector<SpinePair> spine;
    for (std::size_t i = 0; i < j["spine"].size(); ++i) {
      const json& p = j["spine"][i];
      const std::string pat = at + ".spine[" + std::to_string(i) + "]";
      if (!p.is_object() || !p.contains("x") || !p.contains("y"))
        throw ValidationError(pat + ": expected {\"x\":[...],\"y\":[...]}");
      spine.push_back(SpinePair{vector_from_json(genus, p["x"], pat + ".x"),
                                vector_from_json(genus, p["y"], pat + ".y")});
    }
    return TwistGenerator(BoundingPairTwist(
        std::move(spine), vector_from_json(genus, j["c"], at + ".c"),
        int_from_json(j["power"], at + ".power")));
  }
  if (type == "conj") {
    if (!j.contains("by") || !j.contains("inner"))
      throw ValidationError(at + ": conjugated factor needs by and inner");
    const IntMat by = matrix_from_json(j["by"], at + ".by");
    if (by.rows() != 2L * genus || by.cols() != 2L * genus)
      throw ValidationError(at + ".by: expected a " +
                            std::to_string(2 * genus) + "x" +
                            std::to_string(2 * genus) + " matrix");
    return TwistGenerator(SymplecticMatrix(genus, by),
                          factor_from_json(genus, j["inner"], at + ".inner"));
  }
  throw ValidationError(at + ": unknown factor type '" + type + "'");
}

int genus_from_json(const json& j) {
  if (!j.is_object() || !j.contains("genus") ||
      !j["genus"].is_number_integer())
    throw ValidationError("word file: missing integer \"genus\"");
  const int genus = j["genus"].get<int>();
  if (genus < 1) throw ValidationError("word file: genus must be positive");
  return genus;
}

}  // namespace

json annotated_word_to_json(const AnnotatedWord& w) {
  json out;
  out["genus"] = w.genus();
  json factors = json::array();
  for (std::size_t i = 0; i < w.blocks().size(); ++i) {
    const Block& b = w.blocks()[i];
    if (b.word.factors().size() != 1)
      throw ValidationError(
          "word file: only single-factor blocks serialize (block " +
          std::to_string(i) + " has " +
          std::to_string(b.word.factors().size()) + " factors)");
    json f = factor_to_json(b.word.factors().front());
    if (b.side == Side::ta) f["side"] = "TA";
    if (b.side == Side::tb) f["side"] = "TB";
    if (b.side == Side::none && b.declared_f && !f.contains("F"))
      f["F"] = int_to_json(*b.declared_f);
    factors.push_back(std::move(f));
  }
  out["factors"] = std::move(factors);
  return out;
}

AnnotatedWord annotated_word_from_json(const json& j) {
  const int genus = genus_from_json(j);
  if (!j.contains("factors") || !j["factors"].is_array())
    throw ValidationError("word file: missing \"factors\" list");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < j["factors"].size(); ++i) {
    const json& fj = j["factors"][i];
    const std::string at = "factor " + std::to_string(i);
    TwistGenerator f = factor_from_json(genus, fj, at);
    Block b{TwistWord(genus, {f}), std::nullopt, Side::none};
    if (fj.is_object() && fj.contains("side")) {
      const std::string side = fj["side"].get<std::string>();
      if (side == "TA")
        b.side = Side::ta;
      else if (side == "TB")
        b.side = Side::tb;
      else
        throw ValidationError(at + ": side must be \"TA\" or \"TB\", got '" +
                              side + "'");
    }
    if (fj.is_object() && fj.contains("F"))
      b.declared_f = int_from_json(fj["F"], at + ".F");
    blocks.push_back(std::move(b));
  }
  return AnnotatedWord(genus, std::move(blocks));
}

TwistWord word_from_json(const json& j) {
  const int genus = genus_from_json(j);
  if (!j.contains("factors") || !j["factors"].is_array())
    throw ValidationError("word file: missing \"factors\" list");
  std::vector<TwistGenerator> factors;
  for (std::size_t i = 0; i < j["factors"].size(); ++i)
    factors.push_back(factor_from_json(genus, j["factors"][i],
                                       "factor " + std::to_string(i)));
  return TwistWord(genus, std::move(factors));
}

SeifertMatrix seifert_from_json(const json& j) {
  if (!j.is_object() || !j.contains("seifert"))
    throw ValidationError("seifert file: expected {\"seifert\":[[...],...]}");
  const json& m = j["seifert"];
  if (m.is_array() && m.empty()) return SeifertMatrix(IntMat(0, 0));
  return SeifertMatrix(matrix_from_json(m, "seifert"));
}

json laurent_to_json(const LaurentPolynomial& p) {
  json out = json::array();
  for (const auto& [k, c] : p.coeffs()) {
    json term;
    term["exp"] = k;
    term["coeff"] = int_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

std::string laurent_to_string(const LaurentPolynomial& p) {
  if (p.coeffs().empty()) return "0";
  std::string out;
  for (const auto& [k, c] : p.coeffs()) {
    const bool negative = c < 0;
    const Int mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k == 1)
      out += "t";
    else if (k != 0)
      out += "t^" + std::to_string(k);
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " +
                          std::string(e.what()));
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace casson::io
