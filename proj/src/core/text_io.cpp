#include "core/text_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "core/error.hpp"

namespace mono {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail_parse("bad token `" + std::string(token) + "`");
  return value;
}

// "g3", "g3^-1", "g3^2" -> (index, exponent). letter_char is 'g', 's' or 'x'.
std::pair<int, int> parse_generator_token(std::string_view token, char letter_char) {
  if (token.size() < 2 || token[0] != letter_char) fail_parse("bad token `" + std::string(token) + "`");
  std::string_view rest = token.substr(1);
  int exponent = 1;
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    exponent = parse_int(rest.substr(caret + 1), token);
    rest = rest.substr(0, caret);
  }
  int index = parse_int(rest, token);
  if (index < 1) fail_parse("bad token `" + std::string(token) + "`: generator index must be >= 1");
  return {index, exponent};
}

void append_power(std::vector<Letter>& out, int index, int exponent) {
  Letter x = exponent < 0 ? -index : index;
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.push_back(x);
}

// Strips "braid n=<n>:" / "mcg g=<g>:" headers, checking the parameter.
std::string_view strip_header(std::string_view text, std::string_view keyword, std::string_view param,
                              int expected) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, keyword.size()) != keyword) return text;
  i += keyword.size();
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, param.size()) != param || i + param.size() >= text.size() ||
      text[i + param.size()] != '=')
    fail_parse("bad word header in `" + std::string(text.substr(0, 24)) + "...`");
  i += param.size() + 1;
  std::size_t colon = text.find(':', i);
  if (colon == std::string_view::npos) fail_parse("word header missing `:`");
  int value = parse_int(text.substr(i, colon - i), text.substr(i, colon - i));
  if (value != expected)
    fail_parse("word header declares " + std::string(param) + "=" + std::to_string(value) + ", expected " +
               std::to_string(expected));
  return text.substr(colon + 1);
}

bool is_identity_text(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || (tokens.size() == 1 && tokens[0] == "e");
}

std::string format_letters(const std::vector<Letter>& letters, char letter_char) {
  if (letters.empty()) return "e";
  std::string s;
  for (Letter x : letters) {
    if (!s.empty()) s += ' ';
    s += letter_char;
    s += std::to_string(letter_index(x));
    if (x < 0) s += "^-1";
  }
  return s;
}

}  // namespace

FreeWord parse_free_word(std::string_view text) {
  auto tokens = split_tokens(text);
  if (is_identity_text(tokens)) return FreeWord();
  std::vector<Letter> letters;
  for (auto token : tokens) {
    auto [index, exponent] = parse_generator_token(token, 'g');
    append_power(letters, index, exponent);
  }
  return FreeWord::reduce(letters);
}

std::string format_free_word(const FreeWord& w) { return format_letters(w.letters(), 'g'); }

BraidWord parse_braid_word(std::string_view text, int strand_count) {
  text = strip_header(text, "braid", "n", strand_count);
  auto tokens = split_tokens(text);
  if (is_identity_text(tokens)) return BraidWord(strand_count);
  std::vector<Letter> letters;
  for (auto token : tokens) {
    auto [index, exponent] = parse_generator_token(token, 's');
    if (index >= strand_count)
      fail_parse("bad token `" + std::string(token) + "`: B_" + std::to_string(strand_count) +
                 " has generators s1..s" + std::to_string(strand_count - 1));
    append_power(letters, index, exponent);
  }
  return BraidWord(strand_count, letters);
}

std::string format_braid_word(const BraidWord& b, bool with_header) {
  std::string body = format_letters(b.letters(), 's');
  if (!with_header) return body;
  return "braid n=" + std::to_string(b.strand_count()) + ": " + body;
}

McgWord parse_mcg_word(std::string_view text, int genus) {
  text = strip_header(text, "mcg", "g", genus);
  auto tokens = split_tokens(text);
  if (is_identity_text(tokens)) return McgWord(genus);
  std::vector<Letter> letters;
  int h_count = 0;
  for (auto token : tokens) {
    if (token == "H" || token == "H^-1") {
      ++h_count;
      continue;
    }
    auto [index, exponent] = parse_generator_token(token, 'x');
    if (index > 2 * genus + 1)
      fail_parse("bad token `" + std::string(token) + "`: genus " + std::to_string(genus) +
                 " has generators x1..x" + std::to_string(2 * genus + 1));
    append_power(letters, index, exponent);
  }
  return McgWord(genus, letters, h_count);
}

std::string format_mcg_word(const McgWord& w, bool with_header) {
  std::string body;
  if (w.has_h()) body = "H";
  std::string rest = format_letters(w.letters(), 'x');
  if (rest != "e") body += (body.empty() ? "" : " ") + rest;
  if (body.empty()) body = "e";
  if (!with_header) return body;
  return "mcg g=" + std::to_string(w.genus()) + ": " + body;
}

Permutation parse_permutation(std::string_view text, int degree) {
  Permutation p = Permutation::identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_ws();
  if (i >= text.size()) return p;
  if (text.substr(i) == "e") return p;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') fail_parse("bad permutation `" + std::string(text) + "`: expected `(`");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) fail_parse("bad permutation `" + std::string(text) + "`: unclosed cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail_parse("bad permutation `" + std::string(text) + "`");
      int point = parse_int(text.substr(start, i - start), text.substr(start, i - start));
      if (point < 1 || point > degree)
        fail_parse("point " + std::to_string(point) + " out of range for S_" + std::to_string(degree));
      cycle.push_back(point);
    }
    if (cycle.size() >= 2) {
      // (a1 a2 .. ak) = (a1 a2)(a1 a3)..(a1 ak) under left-to-right composition.
      Permutation c = Permutation::identity(degree);
      for (std::size_t k = 1; k < cycle.size(); ++k)
        c = c.compose(Permutation::transposition(degree, cycle[0], cycle[k]));
      p = p.compose(c);
    }
  }
  return p;
}

std::string format_permutation(const Permutation& p) { return p.cycles(); }

}  // namespace mono
