#ifndef PCW_IO_HPP
#define PCW_IO_HPP

// Text and JSON encodings shared by the command line and the tests.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcw/dyck.hpp"
#include "pcw/gentle.hpp"
#include "pcw/words.hpp"

namespace pcw {

// Malformed input text. The command line reports it as a usage error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WordEncoding {
  Letters,   // "acab", a = 1 ... z = 26
  Digits,    // "44443322"
  Integers,  // "10,2,3"
  Json,      // "[10,2,3]"
};

struct ParsedWord {
  Word word;
  WordEncoding encoding;
};

ParsedWord parse_word(std::string_view text);

// Falls back to Integers when a letter does not fit the encoding.
std::string format_word(const Word& w, WordEncoding encoding);

std::vector<int> parse_int_list(std::string_view csv);

// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// Whitespace-separated tokens like "a1 b2-".
std::vector<SignedStep> parse_walk(std::string_view text);

// Arrays of letters, or of encoded word strings.
NecklaceMultiset necklaces_from_json(const nlohmann::json& j);
// Expanded by multiplicity, sorted, each necklace as an integer array.
nlohmann::json to_json(const NecklaceMultiset& m);
std::string format_necklaces(const NecklaceMultiset& m, WordEncoding encoding);

nlohmann::json to_json(const BandModule& m);
BandModule band_module_from_json(const nlohmann::json& j);

std::string arrow_name(const Arrow& a);

}  // namespace pcw

#endif  // PCW_IO_HPP
