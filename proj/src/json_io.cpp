#include "pcsym/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace pcsym {

namespace {

using nlohmann::json;

// Arbitrary-precision integers become JSON numbers when they fit a
// machine word and decimal strings otherwise, so nothing ever rounds.
json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or integer string");
}

json partition_json(const Partition& lam) {
  json arr = json::array();
  for (int part : lam.parts) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array");
  std::vector<int> parts;
  for (const auto& entry : j) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("partition parts must be integers");
    parts.push_back(entry.get<int>());
  }
  return Partition(parts);
}

void put_rat(json& obj, const Rat& c) {
  Rat q = c;
  q.canonicalize();
  obj["num"] = int_json(Int(q.get_num()));
  obj["den"] = int_json(Int(q.get_den()));
}

Rat rat_from_json(const json& obj) {
  if (!obj.contains("num")) throw std::invalid_argument("term lacks \"num\"");
  Int num = int_from_json(obj.at("num"));
  Int den = obj.contains("den") ? int_from_json(obj.at("den")) : Int(1);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Shared sign-aware term joiner for the pretty printers.  Each piece is
// (coefficient, symbol); a symbol of "" means a bare constant term.
std::string join_terms(const std::vector<std::pair<Rat, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, symbol] : pieces) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (symbol.empty()) {
      out << rat_str(mag);
    } else {
      if (mag != 1) out << rat_str(mag) << " ";
      out << symbol;
    }
  }
  return out.str();
}

}  // namespace

json symfunc_to_json(const SymFunc& g, Basis b) {
  json terms = json::array();
  for (const auto& [lam, c] : g.in_basis(b)) {
    json term;
    term["partition"] = partition_json(lam);
    put_rat(term, c);
    terms.push_back(term);
  }
  json doc;
  doc["basis"] = basis_name(b);
  doc["terms"] = terms;
  return doc;
}

SymFunc symfunc_from_json(const json& j, Basis* basis_out) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  if (!j.contains("basis") || !j.at("basis").is_string())
    throw std::invalid_argument("missing \"basis\" name");
  Basis b = parse_basis(j.at("basis").get<std::string>());
  PartitionMap<Rat> coeffs;
  if (j.contains("terms")) {
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw std::invalid_argument("\"terms\" must be an array");
    for (const auto& term : terms) {
      if (!term.is_object() || !term.contains("partition"))
        throw std::invalid_argument("each term needs a \"partition\"");
      coeffs[partition_from_json(term.at("partition"))] += rat_from_json(term);
    }
  }
  if (basis_out) *basis_out = b;
  return SymFunc::from_basis(b, coeffs);
}

json symfunc2_to_json(const SymFunc2& g) {
  json terms = json::array();
  for (const auto& [key, c] : g.terms()) {
    json term;
    term["x_partition"] = partition_json(key.first);
    term["y_partition"] = partition_json(key.second);
    put_rat(term, c);
    terms.push_back(term);
  }
  json doc;
  doc["terms"] = terms;
  return doc;
}

json bivar_to_json(const BivarPoly& f) {
  json terms = json::array();
  for (const auto& [exps, c] : f.terms()) {
    json term;
    term["exponents"] = json::array({exps[0], exps[1]});
    put_rat(term, c);
    terms.push_back(term);
  }
  json doc;
  doc["vars"] = json::array({f.vars()[0], f.vars()[1]});
  doc["terms"] = terms;
  return doc;
}

json tpoly_to_json(const TPoly& f, Basis b) {
  json terms = json::array();
  for (const auto& [power, g] : f.terms()) {
    json term;
    term["power"] = power;
    term["function"] = symfunc_to_json(g, b);
    terms.push_back(term);
  }
  json doc;
  doc["variable"] = "t";
  doc["terms"] = terms;
  return doc;
}

std::string pretty_symfunc(const SymFunc& g, Basis b) {
  std::vector<std::pair<Rat, std::string>> pieces;
  for (const auto& [lam, c] : g.in_basis(b))
    pieces.push_back({c, lam.empty() ? "" : basis_name(b) + lam.str()});
  return join_terms(pieces);
}

std::string pretty_symfunc2(const SymFunc2& g) {
  std::vector<std::pair<Rat, std::string>> pieces;
  for (const auto& [key, c] : g.terms()) {
    std::string symbol;
    if (!key.first.empty()) symbol = "px" + key.first.str();
    if (!key.second.empty()) {
      if (!symbol.empty()) symbol += " ";
      symbol += "py" + key.second.str();
    }
    pieces.push_back({c, symbol});
  }
  return join_terms(pieces);
}

std::string pretty_tpoly(const TPoly& f, Basis b) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [power, g] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << pretty_symfunc(g, b) << ")";
    if (power == 1) out << " t";
    if (power > 1) out << " t^" << power;
  }
  return out.str();
}

}  // namespace pcsym
