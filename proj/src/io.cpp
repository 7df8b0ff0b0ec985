#include "pcw/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pcw/error.hpp"

namespace pcw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

bool all_of(std::string_view s, int (*pred)(int)) {
  return std::all_of(s.begin(), s.end(),
                     [&](char c) { return pred(static_cast<unsigned char>(c)) != 0; });
}

Word word_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>()).word;
  if (!j.is_array()) throw ParseError("expected an array of letters");
  std::vector<int> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("letters must be integers");
    letters.push_back(x.get<int>());
  }
  return Word(std::move(letters));
}

}  // namespace

ParsedWord parse_word(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad JSON word: ") + e.what());
    }
    return {word_from_json(j), WordEncoding::Json};
  }
  if (text.find(',') != std::string_view::npos) {
    return {Word(parse_int_list(text)), WordEncoding::Integers};
  }
  if (all_of(text, [](int c) { return (c >= 'a' && c <= 'z') ? 1 : 0; })) {
    std::vector<int> letters;
    for (char c : text) letters.push_back(c - 'a' + 1);
    return {Word(std::move(letters)), WordEncoding::Letters};
  }
  if (all_of(text, [](int c) { return std::isdigit(c); })) {
    std::vector<int> letters;
    for (char c : text) letters.push_back(c - '0');
    return {Word(std::move(letters)), WordEncoding::Digits};
  }
  throw ParseError("cannot tell how '" + std::string(text) +
                   "' is encoded; use a-z, digits, or comma-separated integers");
}

std::string format_word(const Word& w, WordEncoding encoding) {
  const int top = w.max_letter();
  if (encoding == WordEncoding::Letters && top <= 26) {
    std::string out;
    for (int x : w) out.push_back(static_cast<char>('a' + x - 1));
    return out;
  }
  if (encoding == WordEncoding::Digits && top <= 9) {
    std::string out;
    for (int x : w) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  if (encoding == WordEncoding::Json) return nlohmann::json(w.letters()).dump();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::vector<int> parse_int_list(std::string_view csv) {
  csv = trim(csv);
  if (csv.empty()) throw ParseError("empty list");
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(parse_int(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator");
  Rational q(parse_int(text.substr(0, slash)), den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::vector<SignedStep> parse_walk(std::string_view text) {
  std::vector<SignedStep> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const bool inverse = tok.size() > 1 && tok.back() == '-';
    std::string_view body(tok);
    if (inverse) body.remove_suffix(1);
    if (body.size() < 2 || (body[0] != 'a' && body[0] != 'b')) {
      throw ParseError("bad walk token '" + tok + "'");
    }
    const int index = parse_int(body.substr(1));
    out.push_back({{body[0] == 'a' ? ArrowKind::Alpha : ArrowKind::Beta, index}, inverse});
  }
  if (out.empty()) throw ParseError("empty walk");
  return out;
}

NecklaceMultiset necklaces_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of circular words");
  NecklaceMultiset out;
  for (const auto& item : j) out.insert(Necklace(word_from_json(item)));
  return out;
}

nlohmann::json to_json(const NecklaceMultiset& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const Word& w : m.expanded()) out.push_back(w.letters());
  return out;
}

std::string format_necklaces(const NecklaceMultiset& m, WordEncoding encoding) {
  std::string out;
  for (const Word& w : m.expanded()) {
    if (!out.empty()) out += ' ';
    out += "(" + format_word(w, encoding) + ")";
  }
  return out;
}

std::string arrow_name(const Arrow& a) {
  return (a.kind == ArrowKind::Alpha ? "a" : "b") + std::to_string(a.index);
}

nlohmann::json to_json(const BandModule& m) {
  nlohmann::json arrows = nlohmann::json::object();
  for (std::size_t s = 0; s < m.mats().size(); ++s) {
    const RationalMatrix& mat = m.mats()[s];
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < mat.cols(); ++k) row.push_back(format_rational(mat(i, k)));
      rows.push_back(std::move(row));
    }
    arrows[arrow_name(BandModule::arrow_at(s))] = std::move(rows);
  }
  return {{"n", m.n()},
          {"dims", m.dims()},
          {"lambda", format_rational(m.lambda())},
          {"arrows", std::move(arrows)}};
}

BandModule band_module_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (n < 2 || dims.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::InvalidModule, "dims must list n >= 2 entries");
    }
    Rational lambda = 1;
    if (j.contains("lambda")) {
      const auto& l = j.at("lambda");
      lambda = l.is_string() ? parse_rational(l.get<std::string>()) : Rational(l.get<int>());
    }
    std::vector<RationalMatrix> mats;
    for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(n - 1); ++s) {
      const Arrow a = BandModule::arrow_at(s);
      const std::size_t rows = dims[static_cast<std::size_t>(a.target() - 1)];
      const std::size_t cols = dims[static_cast<std::size_t>(a.source() - 1)];
      RationalMatrix mat(rows, cols);
      const auto& arrows = j.at("arrows");
      const std::string name = arrow_name(a);
      if (arrows.contains(name)) {
        const auto& data = arrows.at(name);
        if (data.size() != rows) throw Error(ErrorKind::InvalidModule, name + ": row count");
        for (std::size_t i = 0; i < rows; ++i) {
          if (data[i].size() != cols) {
            throw Error(ErrorKind::InvalidModule, name + ": column count");
          }
          for (std::size_t k = 0; k < cols; ++k) {
            const auto& x = data[i][k];
            mat(i, k) = x.is_string() ? parse_rational(x.get<std::string>())
                                      : Rational(x.get<int>());
          }
        }
      } else if (rows * cols != 0) {
        throw Error(ErrorKind::InvalidModule, "missing matrix for " + name);
      }
      mats.push_back(std::move(mat));
    }
    return BandModule(n, dims, std::move(mats), lambda);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad module JSON: ") + e.what());
  }
}

}  // namespace pcw
