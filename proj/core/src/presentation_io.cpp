#include "pchar/presentation_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"

namespace pchar {
namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view s, const std::string& ctx) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(ctx + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

// Resolves a letter to a 0-based generator index.
std::size_t resolve_letter(const std::vector<std::string>& names, std::size_t ngens,
                           std::string_view letter, const std::string& ctx) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == letter) return i;
  if (letter.size() > 1 && letter[0] == 'g') {
    const long long idx = to_int(letter.substr(1), ctx);
    if (idx >= 1 && static_cast<std::size_t>(idx) <= ngens) return static_cast<std::size_t>(idx - 1);
  }
  throw ParseError(ctx + ": unknown generator '" + std::string(letter) + "'");
}

struct Letter {
  std::size_t gen;
  long long exp;
};

std::vector<Letter> parse_letters(const std::vector<std::string>& names, std::size_t ngens,
                                  std::string_view word, const std::string& ctx) {
  std::vector<Letter> out;
  for (const auto& tok : split_ws(word)) {
    if (tok == "1") continue;
    const auto caret = tok.find('^');
    const std::string_view t(tok);
    const std::size_t gen = resolve_letter(names, ngens, t.substr(0, caret), ctx);
    const long long e = caret == std::string::npos ? 1 : to_int(t.substr(caret + 1), ctx);
    out.push_back({gen, e});
  }
  return out;
}

Element normal_form_word(const PcPresentation& pres, std::string_view word, const std::string& ctx) {
  Element x(pres.ngens);
  std::size_t last = 0;
  bool first = true;
  for (const auto& l : parse_letters(pres.names, pres.ngens, word, ctx)) {
    if (!first && l.gen <= last)
      throw ParseError(ctx + ": relation words must list generators in increasing order");
    if (l.exp < 0 || l.exp >= static_cast<long long>(pres.prime))
      throw ParseError(ctx + ": relation exponents must lie in [0, p)");
    x[l.gen] = static_cast<Exponent>(l.exp);
    last = l.gen;
    first = false;
  }
  return x;
}

std::string format_word_impl(const PcPresentation& pres, const Element& x, bool named) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += named ? pres.name(k) : "g" + std::to_string(k + 1);
    out += '^';
    out += std::to_string(x[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  PcPresentation pres;
  bool have_p = false, have_n = false;
  std::vector<std::pair<std::string, std::size_t>> deferred;  // (line, number)

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string ctx = "line " + std::to_string(lineno);
    if (toks[0] == "p") {
      if (toks.size() != 2) throw ParseError(ctx + ": expected 'p <prime>'");
      pres.prime = static_cast<unsigned>(to_int(toks[1], ctx));
      have_p = true;
    } else if (toks[0] == "gens") {
      if (toks.size() != 2) throw ParseError(ctx + ": expected 'gens <n>'");
      const long long n = to_int(toks[1], ctx);
      if (n <= 0) throw ParseError(ctx + ": generator count must be positive");
      pres.ngens = static_cast<std::size_t>(n);
      have_n = true;
    } else if (toks[0] == "names") {
      pres.names.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "pow" || toks[0] == "conj") {
      deferred.emplace_back(std::string(line), lineno);
    } else {
      throw ParseError(ctx + ": unknown directive '" + toks[0] + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_p || !have_n) throw ParseError("presentation needs 'p' and 'gens' lines");
  if (!is_prime(pres.prime)) throw ParseError("p must be prime");
  if (!pres.names.empty() && pres.names.size() != pres.ngens)
    throw ParseError("names line must list exactly gens names");

  PcPresentation out = PcPresentation::elementary_abelian(pres.prime, pres.ngens, pres.names);
  for (const auto& [line, no] : deferred) {
    const std::string ctx = "line " + std::to_string(no);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(ctx + ": missing '='");
    const auto lhs = split_ws(std::string_view(line).substr(0, eq));
    const std::string_view rhs = std::string_view(line).substr(eq + 1);
    auto index = [&](const std::string& s) {
      const long long v = to_int(s, ctx);
      if (v < 1 || static_cast<std::size_t>(v) > out.ngens) throw ParseError(ctx + ": generator index out of range");
      return static_cast<std::size_t>(v - 1);
    };
    if (lhs[0] == "pow") {
      if (lhs.size() != 2) throw ParseError(ctx + ": expected 'pow i = <word>'");
      out.powers[index(lhs[1])] = normal_form_word(out, rhs, ctx);
    } else {
      if (lhs.size() != 3) throw ParseError(ctx + ": expected 'conj j i = <word>'");
      const std::size_t j = index(lhs[1]), i = index(lhs[2]);
      if (i >= j) throw ParseError(ctx + ": conj j i requires i < j");
      out.conjugates[j][i] = normal_form_word(out, rhs, ctx);
    }
  }
  try {
    out.validate_syntax();
  } catch (const PresentationError& e) {
    throw ParseError(e.what());
  }
  return out;
}

PcPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_word(const PcPresentation& pres, const Element& x) {
  return format_word_impl(pres, x, false);
}

std::string format_named_word(const PcPresentation& pres, const Element& x) {
  return format_word_impl(pres, x, true);
}

std::string format_presentation(const PcPresentation& pres) {
  std::ostringstream os;
  os << "p " << pres.prime << '\n';
  os << "gens " << pres.ngens << '\n';
  bool default_names = true;
  for (std::size_t i = 0; i < pres.names.size(); ++i)
    if (pres.names[i] != "g" + std::to_string(i + 1)) default_names = false;
  if (!pres.names.empty() && !default_names) {
    os << "names";
    for (const auto& n : pres.names) os << ' ' << n;
    os << '\n';
  }
  for (std::size_t i = 0; i < pres.ngens; ++i)
    if (!pres.powers[i].is_identity())
      os << "pow " << i + 1 << " = " << format_word(pres, pres.powers[i]) << '\n';
  for (std::size_t i = 0; i < pres.ngens; ++i)
    for (std::size_t j = i + 1; j < pres.ngens; ++j)
      if (pres.conjugates[j][i] != pres.unit(j))
        os << "conj " << j + 1 << ' ' << i + 1 << " = " << format_word(pres, pres.conjugates[j][i]) << '\n';
  return os.str();
}

Element parse_word(const PcGroup& group, std::string_view word) {
  const auto& pres = group.presentation();
  Element x = group.identity();
  for (const auto& l : parse_letters(pres.names, pres.ngens, word, "word '" + std::string(word) + "'")) {
    const long long e = l.exp;
    const Element g = group.generator(l.gen);
    const Element base = e < 0 ? group.inverse(g) : g;
    x = group.multiply(x, group.power(base, static_cast<std::uint64_t>(e < 0 ? -e : e)));
  }
  return x;
}

std::vector<Element> parse_word_list(const PcGroup& group, std::string_view text) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    if (!split_ws(item).empty()) out.push_back(parse_word(group, item));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

}  // namespace pchar
