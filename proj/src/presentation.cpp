#include "mcg/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace mcg {

namespace {

void check_tokens_declared(const Presentation& p, const std::vector<WordToken>& w) {
  for (const auto& tok : w)
    if (std::find(p.gens.begin(), p.gens.end(), tok.gen) == p.gens.end())
      throw UsageError("relation uses undeclared generator '" + tok.gen + "'");
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line[0] == '#') continue;
    std::string where = "line " + std::to_string(lineno);
    if (line.rfind("gens:", 0) == 0) {
      if (have_gens) throw UsageError(where + ": duplicate gens line");
      std::istringstream gs(line.substr(5));
      std::string g;
      while (gs >> g) {
        if (std::find(p.gens.begin(), p.gens.end(), g) != p.gens.end())
          throw UsageError(where + ": duplicate generator '" + g + "'");
        p.gens.push_back(g);
      }
      if (p.gens.empty()) throw UsageError(where + ": empty generator list");
      have_gens = true;
    } else if (line.rfind("rel:", 0) == 0) {
      if (!have_gens) throw UsageError(where + ": rel before gens");
      std::string body = line.substr(4);
      auto eq = body.find('=');
      if (eq == std::string::npos || body.find('=', eq + 1) != std::string::npos)
        throw UsageError(where + ": relation needs exactly one '='");
      auto lhs = parse_word_tokens(body.substr(0, eq));
      auto rhs = parse_word_tokens(body.substr(eq + 1));
      check_tokens_declared(p, lhs);
      check_tokens_declared(p, rhs);
      p.rels.emplace_back(std::move(lhs), std::move(rhs));
    } else {
      throw UsageError(where + ": expected 'gens:' or 'rel:'");
    }
  }
  if (!have_gens) throw UsageError("presentation has no gens line");
  return p;
}

std::string presentation_to_string(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.gens) os << ' ' << g;
  os << '\n';
  for (const auto& [lhs, rhs] : p.rels)
    os << "rel: " << tokens_to_string(lhs) << " = " << tokens_to_string(rhs) << '\n';
  return os.str();
}

Presentation builtin_presentation(const std::string& name) {
  if (name == "gammaJ")
    return parse_presentation(
        "gens: y u a b\n"
        "rel: y u y = u y u\n"
        "rel: y u y y u y y u y y u y = 1\n"
        "rel: a b = b a\n"
        "rel: a y = y a b\n"
        "rel: a u = u a\n"
        "rel: b y = y b\n"
        "rel: b u = u b a^-1\n");
  if (name == "G2")
    return parse_presentation(
        "gens: alpha a b\n"
        "rel: alpha^2 = 1\n"
        "rel: a b = b a\n"
        "rel: a alpha = alpha a^-1\n"
        "rel: b alpha = alpha b^-1\n");
  if (name == "G4")
    return parse_presentation(
        "gens: beta a b\n"
        "rel: beta^4 = 1\n"
        "rel: a b = b a\n"
        "rel: a beta = beta b\n"
        "rel: b beta = beta a^-1\n");
  if (name == "G6")
    return parse_presentation(
        "gens: gamma a b\n"
        "rel: gamma^6 = 1\n"
        "rel: a b = b a\n"
        "rel: a gamma = gamma b\n"
        "rel: b gamma = gamma a^-1 b\n");
  if (name == "H28")
    return parse_presentation(
        "gens: a b sigma\n"
        "rel: sigma^28 = 1\n"
        "rel: a sigma = sigma a\n"
        "rel: b sigma = sigma b\n"
        "rel: a b = b a sigma\n");
  throw UsageError("unknown built-in presentation '" + name + "'");
}

Presentation extension_presentation(const Int& m, const Int& n) {
  std::ostringstream os;
  os << "gens: y u a b s\n"
        "rel: s y = y s\n"
        "rel: s u = u s\n"
        "rel: s a = a s\n"
        "rel: s b = b s\n"
        "rel: y u y = u y u\n";
  os << "rel: y u y y u y y u y y u y = s^" << n << "\n";
  os << "rel: a b = b a s^" << m << "\n";
  os << "rel: a y = y a b\n"
        "rel: a u = u a\n"
        "rel: b y = y b\n"
        "rel: b u = u b a^-1\n";
  return parse_presentation(os.str());
}

FgAbelianGroup abelianize_presentation(const Presentation& p) {
  IntMat rows;
  for (const auto& [lhs, rhs] : p.rels) {
    IntVec row(p.gens.size(), 0);
    auto add = [&](const std::vector<WordToken>& w, int sign) {
      for (const auto& tok : w) {
        auto it = std::find(p.gens.begin(), p.gens.end(), tok.gen);
        row[static_cast<std::size_t>(it - p.gens.begin())] += sign * Int(tok.exp);
      }
    };
    add(lhs, +1);
    add(rhs, -1);
    rows.push_back(std::move(row));
  }
  return cokernel_of_relations(rows, p.gens.size());
}

}  // namespace mcg
