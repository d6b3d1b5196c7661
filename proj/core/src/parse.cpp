#include "wagner/parse.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace wagner {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
  std::ostringstream msg;
  msg << what << " (at byte " << pos << ")";
  throw ParseError(msg.str(), pos);
}

// One `x->image` rule with the byte positions of its pieces.
struct Rule {
  char lhs = 0;
  std::size_t lhs_pos = 0;
  std::vector<Letter> image;
  std::vector<std::size_t> letter_pos;
  bool explicit_identity = false;
  std::size_t identity_pos = 0;
};

std::vector<Rule> scan_rules(const std::string& text) {
  std::vector<Rule> rules;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && is_space(text[i])) ++i;
  };
  for (;;) {
    skip_ws();
    if (i == n) break;
    Rule rule;
    if (!std::islower(static_cast<unsigned char>(text[i]))) {
      fail("expected a lowercase generator on the left-hand side", i);
    }
    rule.lhs = text[i];
    rule.lhs_pos = i;
    ++i;
    skip_ws();
    if (i >= n || text[i] != '-') fail("expected '->' after the generator", i);
    ++i;
    if (i >= n || text[i] != '>') fail("expected '->' after the generator", i);
    ++i;
    for (;;) {
      skip_ws();
      if (i == n || text[i] == ';') break;
      const char c = text[i];
      if (c == '1') {
        rule.explicit_identity = true;
        rule.identity_pos = i;
        ++i;
      } else if (std::islower(static_cast<unsigned char>(c))) {
        rule.image.push_back(Letter(c - 'a' + 1, +1));
        rule.letter_pos.push_back(i);
        ++i;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        rule.image.push_back(Letter(c - 'A' + 1, -1));
        rule.letter_pos.push_back(i);
        ++i;
      } else {
        fail(std::string("unexpected character '") + c + "' in an image", i);
      }
    }
    if (rule.explicit_identity && !rule.image.empty()) {
      fail("'1' (the empty word) cannot be mixed with letters", rule.identity_pos);
    }
    if (!rule.explicit_identity && rule.image.empty()) {
      fail("empty image; write '1' for the identity", i);
    }
    rules.push_back(std::move(rule));
    if (i < n && text[i] == ';') ++i;
  }
  if (rules.empty()) fail("no rules found", 0);
  return rules;
}

ParseResult assemble(int rank, std::vector<std::vector<Letter>> raw_images,
                     const std::function<void(int, std::size_t)>& report,
                     bool auto_reduce) {
  // report(i, k) raises a ParseError located at the k-th letter of image i.
  bool reduced_any = false;
  std::vector<Word> images;
  images.reserve(raw_images.size());
  for (std::size_t img = 0; img < raw_images.size(); ++img) {
    const auto& raw = raw_images[img];
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k].generator() > rank) report(static_cast<int>(img), k);
    }
    bool unreduced = false;
    for (std::size_t k = 1; k < raw.size(); ++k) {
      if (raw[k - 1].cancels(raw[k])) {
        unreduced = true;
        if (!auto_reduce) report(static_cast<int>(img), k);
      }
    }
    reduced_any = reduced_any || unreduced;
    images.push_back(Word::reduce(std::span<const Letter>(raw.data(), raw.size())));
  }
  return ParseResult{Endomorphism(rank, std::move(images)), reduced_any};
}

}  // namespace

ParseResult parse_endomorphism(const std::string& text, bool auto_reduce) {
  std::vector<Rule> rules = scan_rules(text);
  const int rank = static_cast<int>(rules.size());
  if (rank > 26) fail("letter format supports at most 26 generators", rules[26].lhs_pos);
  for (int t = 0; t < rank; ++t) {
    if (rules[static_cast<std::size_t>(t)].lhs != static_cast<char>('a' + t)) {
      std::ostringstream msg;
      msg << "rule " << t + 1 << " must define '" << static_cast<char>('a' + t)
          << "' (the rules declare rank " << rank << ")";
      fail(msg.str(), rules[static_cast<std::size_t>(t)].lhs_pos);
    }
  }
  std::vector<std::vector<Letter>> raw;
  raw.reserve(rules.size());
  for (const Rule& r : rules) raw.push_back(r.image);
  return assemble(rank, std::move(raw),
                  [&](int img, std::size_t k) {
                    const Rule& r = rules[static_cast<std::size_t>(img)];
                    const std::size_t pos = r.letter_pos[k];
                    const Letter l = r.image[k];
                    if (l.generator() > rank) {
                      std::ostringstream msg;
                      msg << "letter '" << static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.generator() - 1)
                          << "' exceeds the declared rank " << rank;
                      fail(msg.str(), pos);
                    }
                    fail("image is not reduced (adjacent cancelling pair); "
                         "pass auto-reduce to accept",
                         pos);
                  },
                  auto_reduce);
}

ParseResult parse_endomorphism_json(const std::string& text, bool auto_reduce) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("images")) {
    throw ParseError("structured format needs an object with 'rank' and 'images'", 0);
  }
  if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() < 1) {
    throw ParseError("'rank' must be a positive integer", 0);
  }
  const int rank = doc["rank"].get<int>();
  if (!doc["images"].is_array() ||
      doc["images"].size() != static_cast<std::size_t>(rank)) {
    throw ParseError("'images' must hold exactly 'rank' arrays", 0);
  }
  std::vector<std::vector<Letter>> raw;
  raw.reserve(static_cast<std::size_t>(rank));
  for (const auto& arr : doc["images"]) {
    if (!arr.is_array()) throw ParseError("each image must be an array of integers", 0);
    std::vector<Letter> image;
    image.reserve(arr.size());
    for (const auto& v : arr) {
      if (!v.is_number_integer() || v.get<long long>() == 0) {
        throw ParseError("letters are nonzero signed generator indices", 0);
      }
      const long long code = v.get<long long>();
      if (code > rank || code < -static_cast<long long>(rank)) {
        std::ostringstream msg;
        msg << "letter " << code << " exceeds the declared rank " << rank;
        throw ParseError(msg.str(), 0);
      }
      image.push_back(Letter::from_code(static_cast<std::int32_t>(code)));
    }
    raw.push_back(std::move(image));
  }
  return assemble(rank, std::move(raw),
                  [&](int img, std::size_t k) {
                    std::ostringstream msg;
                    msg << "image " << img + 1 << ", letter " << k + 1
                        << ": image is not reduced; pass auto-reduce to accept";
                    throw ParseError(msg.str(), 0);
                  },
                  auto_reduce);
}

ParseResult parse_endomorphism_any(const std::string& text, bool auto_reduce) {
  for (char c : text) {
    if (is_space(c)) continue;
    if (c == '{') return parse_endomorphism_json(text, auto_reduce);
    break;
  }
  return parse_endomorphism(text, auto_reduce);
}

std::string format_word(const Word& w, int rank) {
  std::ostringstream out;
  if (rank <= 26) {
    if (w.empty()) return "1";
    for (Letter l : w.letters()) {
      out << static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.generator() - 1);
    }
  } else {
    out << '[';
    for (std::size_t k = 0; k < w.length(); ++k) {
      if (k > 0) out << ',';
      out << w.at(k).code();
    }
    out << ']';
  }
  return out.str();
}

std::string format_endomorphism(const Endomorphism& phi) {
  std::ostringstream out;
  if (phi.rank() <= 26) {
    for (int i = 1; i <= phi.rank(); ++i) {
      if (i > 1) out << "; ";
      out << static_cast<char>('a' + i - 1) << "->" << format_word(phi.image(i), phi.rank());
    }
  } else {
    out << "{\"rank\": " << phi.rank() << ", \"images\": [";
    for (int i = 1; i <= phi.rank(); ++i) {
      if (i > 1) out << ", ";
      out << format_word(phi.image(i), phi.rank());
    }
    out << "]}";
  }
  return out.str();
}

}  // namespace wagner
