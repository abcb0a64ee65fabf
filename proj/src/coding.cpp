#include "zerodim/coding.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

namespace zerodim {

namespace {

std::mutex prime_mutex;
std::vector<BigNat> prime_table = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

const BigNat& nth_prime(std::size_t i) {
  std::lock_guard<std::mutex> lock(prime_mutex);
  while (prime_table.size() <= i) {
    std::uint64_t c = prime_table.back().convert_to<std::uint64_t>() + 2;
    while (!is_prime_u64(c)) c += 2;
    prime_table.emplace_back(c);
  }
  return prime_table[i];
}

Nat encode_word(const Word& s) {
  if (s.empty()) return Nat(0);
  double bits = 0;
  bool huge = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_small()) {
      huge = true;
      break;
    }
    double e = s[i].small_value().convert_to<double>() + 1.0;
    bits += e * std::log2(nth_prime(i).convert_to<double>());
    if (!std::isfinite(bits) || bits > Nat::kMaterializeBits) {
      huge = true;
      break;
    }
  }
  if (huge) return Nat::coded(s);
  BigNat out = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned exp = s[i].small_value().convert_to<unsigned>() + 1;
    out *= boost::multiprecision::pow(nth_prime(i), exp);
  }
  return Nat(out);
}

std::uint64_t encode_index(const std::vector<std::uint64_t>& s) {
  Nat code = encode_word(from_small_word(s));
  if (!code.is_small() || code.small_value() > BigNat(std::uint64_t(1) << 62))
    throw ResourceError("coordinate index code exceeds the addressable range");
  return code.small_value().convert_to<std::uint64_t>();
}

std::optional<Word> decode_value(const BigNat& n) {
  if (n == 0) return Word{};
  if (n == 1) return std::nullopt;
  BigNat rest = n;
  Word out;
  for (std::size_t i = 0; rest > 1; ++i) {
    const BigNat& q = nth_prime(i);
    std::uint64_t e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e == 0) return std::nullopt;  // support is not contiguous
    out.emplace_back(BigNat(e - 1));
  }
  return out;
}

std::optional<Word> decode_nat(const Nat& n) {
  if (!n.is_small()) return n.coded_word();
  return decode_value(n.small_value());
}

namespace {

std::mutex alphabet_mutex;
std::map<std::pair<int, std::size_t>, std::vector<Nat>> alphabet_cache;

void sort_unique(std::vector<Nat>& v) {
  std::sort(v.begin(), v.end(), [](const Nat& a, const Nat& b) { return nat_cmp(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Enumerates prod_{i<n} A_i, calling f on each word; respects the cap.
void product_words(SectionTag::Kind sec, std::size_t n, const Limits& lim,
                   const std::function<void(const Word&)>& f) {
  Word cur(n, Nat(0));
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (++count > lim.alphabet_elems)
        throw ResourceError("alphabet product enumeration exceeds cap");
      f(cur);
      return;
    }
    for (const Nat& a : alphabet(sec, i, lim)) {
      cur[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<Nat> compute_alphabet(SectionTag::Kind sec, std::size_t n, const Limits& lim) {
  std::vector<Nat> out{Nat(1)};
  if (n == 0) return out;
  if (sec == SectionTag::S2) {
    // A_(n+1) needs the product over i <= n, i.e. over i < n of this call.
    product_words(SectionTag::S2, n, lim, [&](const Word& s) {
      Word ext = s;
      ext.emplace_back(1);
      out.push_back(encode_word(ext));
    });
  } else {
    std::optional<Word> pre = decode_value(BigNat(n));
    if (!pre) return out;  // n not in the image of the code
    std::vector<std::uint64_t> ns = to_small_word(*pre);
    // Positions that must carry letter 1: codes of the proper nonempty
    // prefixes of the decoded word.
    std::vector<std::uint64_t> pinned;
    for (std::size_t i = 1; i < ns.size(); ++i)
      pinned.push_back(encode_index(std::vector<std::uint64_t>(ns.begin(), ns.begin() + i)));
    product_words(SectionTag::S3, n, lim, [&](const Word& s) {
      for (std::uint64_t p : pinned)
        if (s[p] != Nat(1)) return;
      Word ext = s;
      ext.emplace_back(1);
      out.push_back(encode_word(ext));
    });
  }
  if (out.size() > lim.alphabet_elems) throw ResourceError("alphabet exceeds element cap");
  sort_unique(out);
  return out;
}

}  // namespace

const std::vector<Nat>& alphabet(SectionTag::Kind sec, std::size_t n, const Limits& lim) {
  {
    std::lock_guard<std::mutex> lock(alphabet_mutex);
    auto it = alphabet_cache.find({sec, n});
    if (it != alphabet_cache.end()) return it->second;
  }
  std::vector<Nat> v = compute_alphabet(sec, n, lim);
  std::lock_guard<std::mutex> lock(alphabet_mutex);
  return alphabet_cache.emplace(std::make_pair(sec, n), std::move(v)).first->second;
}

bool in_Z0(SectionTag::Kind sec, const Word& u, const Limits& lim) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::vector<Nat>& a = alphabet(sec, i, lim);
    if (!std::binary_search(a.begin(), a.end(), u[i],
                            [](const Nat& x, const Nat& y) { return nat_cmp(x, y) < 0; }))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Word / Nat text parsing. Lives here so that parsed "N(...)" letters are
// normalized through the canonical encoder.

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw DomainError("word parse: expected '" + std::string(1, c) + "' in " + s);
  }

  Nat nat() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'N') {
      ++pos;
      return encode_word(word());
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw DomainError("word parse: expected a number in " + s);
    return Nat(BigNat(s.substr(start, pos - start)));
  }

  Word word() {
    expect('(');
    Word out;
    skip_ws();
    if (eat(')')) return out;
    out.push_back(nat());
    while (eat(',')) out.push_back(nat());
    expect(')');
    return out;
  }

  void finish() {
    skip_ws();
    if (pos != s.size()) throw DomainError("word parse: trailing characters in " + s);
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  Parser p(text);
  Word w = p.word();
  p.finish();
  return w;
}

Nat parse_nat(const std::string& text) {
  Parser p(text);
  Nat n = p.nat();
  p.finish();
  return n;
}

}  // namespace zerodim
