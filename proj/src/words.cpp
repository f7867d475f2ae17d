#include "mcg/words.hpp"

#include <cctype>
#include <sstream>

namespace mcg {

std::vector<WordToken> parse_word_tokens(const std::string& text) {
  std::vector<WordToken> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;  // identity
    std::string name = tok;
    long long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (e.empty()) throw UsageError("empty exponent in token '" + tok + "'");
      std::size_t pos = 0;
      try {
        exp = std::stoll(e, &pos);
      } catch (const std::exception&) {
        throw UsageError("bad exponent in token '" + tok + "'");
      }
      if (pos != e.size()) throw UsageError("bad exponent in token '" + tok + "'");
    }
    if (name.empty()) throw UsageError("empty generator name in token '" + tok + "'");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
        throw UsageError("bad generator name '" + name + "'");
    if (exp != 0) out.push_back({name, exp});
  }
  return out;
}

std::string tokens_to_string(const std::vector<WordToken>& tokens) {
  if (tokens.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) os << ' ';
    os << tokens[i].gen;
    if (tokens[i].exp != 1) os << '^' << tokens[i].exp;
  }
  return os.str();
}

std::vector<WordToken> invert_tokens(const std::vector<WordToken>& tokens) {
  std::vector<WordToken> out;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

FreeWord reduce(FreeWord w) {
  FreeWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(std::move(w));
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

FreeWord free_word_from_string(const std::string& text) {
  FreeWord w;
  for (const auto& tok : parse_word_tokens(text)) {
    FreeGen g;
    if (tok.gen == "s")
      g = FreeGen::S;
    else if (tok.gen == "t")
      g = FreeGen::T;
    else
      throw UsageError("free words use letters s, t; got '" + tok.gen + "'");
    int sign = tok.exp > 0 ? 1 : -1;
    for (long long i = 0; i < (tok.exp > 0 ? tok.exp : -tok.exp); ++i) w.push_back({g, sign});
  }
  return reduce(std::move(w));
}

std::string free_word_to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  // Run-length collapse consecutive equal letters into exponents.
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * w[i].sign;
    if (!first) os << ' ';
    os << (w[i].gen == FreeGen::S ? 's' : 't');
    if (e != 1) os << '^' << e;
    first = false;
    i = j;
  }
  return os.str();
}

FreeWord substitute(const FreeWord& w, const FreeWord& s_img, const FreeWord& t_img) {
  FreeWord s_inv = inverse(s_img), t_inv = inverse(t_img);
  FreeWord out;
  for (const auto& l : w) {
    const FreeWord& img = (l.gen == FreeGen::S) ? (l.sign > 0 ? s_img : s_inv)
                                                : (l.sign > 0 ? t_img : t_inv);
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(std::move(out));
}

std::array<Int, 2> exponent_sums(const FreeWord& w) {
  std::array<Int, 2> e{0, 0};
  for (const auto& l : w) e[l.gen == FreeGen::S ? 0 : 1] += l.sign;
  return e;
}

DiffeoPair diffeo_identity() {
  return {free_word_from_string("s"), free_word_from_string("t")};
}

DiffeoPair compose(const DiffeoPair& first, const DiffeoPair& then) {
  return {substitute(then.w1, first.w1, first.w2), substitute(then.w2, first.w1, first.w2)};
}

DiffeoPair diffeo_generator(const std::string& name) {
  auto mk = [](const char* a, const char* b) {
    return DiffeoPair{free_word_from_string(a), free_word_from_string(b)};
  };
  if (name == "Y") return mk("s", "s t");
  if (name == "U") return mk("t^-1 s", "t");
  if (name == "A") return mk("t s t^-1", "t");
  if (name == "B") return mk("s", "s t s^-1");
  if (name == "Y^-1") return mk("s", "s^-1 t");
  if (name == "U^-1") return mk("t s", "t");
  if (name == "A^-1") return mk("t^-1 s t", "t");
  if (name == "B^-1") return mk("s", "s^-1 t s");
  if (name == "Id") return diffeo_identity();
  throw UsageError("unknown diffeomorphism generator '" + name + "'");
}

namespace {

DiffeoPair generator_power(const std::string& base, long long exp) {
  if (base == "Id" || exp == 0) return diffeo_identity();
  std::string name = exp > 0 ? base : base + "^-1";
  DiffeoPair g = diffeo_generator(name);
  DiffeoPair acc = g;
  for (long long i = 1; i < (exp > 0 ? exp : -exp); ++i) acc = compose(acc, g);
  return acc;
}

}  // namespace

DiffeoPair eval_chain(const std::vector<WordToken>& tokens) {
  DiffeoPair acc = diffeo_identity();
  for (const auto& tok : tokens) acc = compose(acc, generator_power(tok.gen, tok.exp));
  return acc;
}

DiffeoPair eval_group_word(const std::vector<WordToken>& tokens) {
  DiffeoPair acc = diffeo_identity();
  for (const auto& tok : tokens) acc = compose(generator_power(tok.gen, tok.exp), acc);
  return acc;
}

bool diffeo_equal(const DiffeoPair& a, const DiffeoPair& b) {
  return a.w1 == b.w1 && a.w2 == b.w2;
}

IntMat induced_h3_matrix(const DiffeoPair& d) {
  auto c1 = exponent_sums(d.w1);
  auto c2 = exponent_sums(d.w2);
  return {{c1[0], c2[0]}, {c1[1], c2[1]}};
}

const std::vector<NamedIdentity>& diffeo_identity_suite() {
  static const std::vector<NamedIdentity> suite = {
      {"YUY = UYU", "Y U Y", "U Y U", true},
      {"(B^-1 YUY)^4 = Id", "B^-1 Y U Y B^-1 Y U Y B^-1 Y U Y B^-1 Y U Y", "1", true},
      {"AY = YAB", "A Y", "Y A B", true},
      {"AU = UA", "A U", "U A", true},
      {"BY = YB", "B Y", "Y B", true},
      {"BU = UBA^-1", "B U", "U B A^-1", true},
      {"YUY A^-1 = B YUY", "Y U Y A^-1", "B Y U Y", true},
      {"AB = BA", "A B", "B A", false},
  };
  return suite;
}

}  // namespace mcg
