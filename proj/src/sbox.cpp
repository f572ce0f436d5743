#include "sboxkit/sbox.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sbox_tables.hpp"

namespace sboxkit {

SBox::SBox(const std::array<std::uint8_t, 256>& table, std::string name)
    : table_(table), name_(std::move(name)) {
  std::array<bool, 256> seen{};
  for (std::uint8_t v : table_) {
    if (seen[v]) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "S-Box table duplicates value 0x%02X", v);
      throw input_error(buf);
    }
    seen[v] = true;
  }
}

SBox identity_sbox() {
  std::array<std::uint8_t, 256> t{};
  for (int i = 0; i < 256; ++i) t[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return SBox(t, "identity");
}

std::vector<std::size_t> CycleStructure::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  return out;
}

StructuralReport structural_report(const SBox& s) {
  StructuralReport report;
  for (int i = 0; i < 256; ++i) {
    const auto b = static_cast<std::uint8_t>(i);
    if (s[b] == b) report.fixed_points.push_back(b);
    if (s[b] == static_cast<std::uint8_t>(255 - i))
      report.reverse_fixed_points.push_back(b);
  }
  std::array<bool, 256> seen{};
  for (int start = 0; start < 256; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<std::uint8_t> cycle;
    std::uint8_t x = static_cast<std::uint8_t>(start);
    while (!seen[x]) {
      seen[x] = true;
      cycle.push_back(x);
      x = s[x];
    }
    report.cycles.cycles.push_back(std::move(cycle));
  }
  std::sort(report.cycles.cycles.begin(), report.cycles.cycles.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.front() < b.front();
            });
  return report;
}

bool is_strong(const SBox& s) {
  for (int i = 0; i < 256; ++i) {
    const auto b = static_cast<std::uint8_t>(i);
    if (s[b] == b) return false;
    if (s[b] == static_cast<std::uint8_t>(255 - i)) return false;
  }
  // single 256-cycle: walking from 0 must visit everything
  int len = 1;
  std::uint8_t x = s[0];
  while (x != 0) {
    x = s[x];
    ++len;
  }
  return len == 256;
}

SBox builtin_sbox(BuiltinSBox which) {
  switch (which) {
    case BuiltinSBox::Aes:
      return SBox(tables::kAesTable, "aes");
    case BuiltinSBox::Sm4:
      return SBox(tables::kSm4Table, "sm4");
    case BuiltinSBox::Skipjack:
      return SBox(tables::kSkipjackTable, "skipjack");
    case BuiltinSBox::Whirlpool:
      return SBox(tables::kWhirlpoolTable, "whirlpool");
    case BuiltinSBox::ZucS0:
      return SBox(tables::kZucS0Table, "zuc_s0");
    case BuiltinSBox::ZucS1:
      return SBox(tables::kZucS1Table, "zuc_s1");
    case BuiltinSBox::PaperTable4:
      return SBox(tables::kPaperTable4, "paper_table4");
  }
  throw input_error("unknown builtin S-Box");
}

SBox builtin_sbox(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (n == "aes") return builtin_sbox(BuiltinSBox::Aes);
  if (n == "sm4") return builtin_sbox(BuiltinSBox::Sm4);
  if (n == "skipjack") return builtin_sbox(BuiltinSBox::Skipjack);
  if (n == "whirlpool") return builtin_sbox(BuiltinSBox::Whirlpool);
  if (n == "zuc_s0" || n == "zuc-s0") return builtin_sbox(BuiltinSBox::ZucS0);
  if (n == "zuc_s1" || n == "zuc-s1") return builtin_sbox(BuiltinSBox::ZucS1);
  if (n == "paper_table4" || n == "table4")
    return builtin_sbox(BuiltinSBox::PaperTable4);
  throw input_error("unknown builtin S-Box name: " + n);
}

std::vector<std::string> builtin_sbox_names() {
  return {"aes",    "sm4",    "skipjack",    "whirlpool",
          "zuc_s0", "zuc_s1", "paper_table4"};
}

namespace {

std::uint8_t byte_from_state(double x) {
  const double scaled = std::floor(x * 1e16);
  return static_cast<std::uint8_t>(static_cast<std::uint64_t>(scaled) & 0xFF);
}

struct DrawResult {
  std::array<std::uint8_t, 256> table;
  bool complete;
};

// Step 1 + dedup: transient, then up to n draws keeping first occurrences;
// stops early once all 256 values have appeared.
DrawResult draw_candidate(const EcmParams& params, State2D seed, long transient,
                          long n) {
  State2D s = seed;
  for (long i = 0; i < transient; ++i) s = ecm_step(params, s);
  DrawResult result{};
  std::array<bool, 256> seen{};
  int filled = 0;
  for (long i = 0; i < n && filled < 256; ++i) {
    s = ecm_step(params, s);
    const std::uint8_t v = byte_from_state(s.x);
    if (!seen[v]) {
      seen[v] = true;
      result.table[static_cast<std::size_t>(filled)] = v;
      ++filled;
    }
  }
  result.complete = filled == 256;
  return result;
}

bool structurally_strong(const std::array<std::uint8_t, 256>& t) {
  for (int i = 0; i < 256; ++i) {
    if (t[static_cast<std::size_t>(i)] == i) return false;
    if (t[static_cast<std::size_t>(i)] == 255 - i) return false;
  }
  int len = 1;
  std::uint8_t x = t[0];
  while (x != 0) {
    x = t[x];
    ++len;
  }
  return len == 256;
}

}  // namespace

std::pair<SBox, ConstructionTrace> construct_sbox(const EcmParams& params,
                                                  State2D s0,
                                                  const ConstructionConfig& cfg) {
  params.validate();
  s0.validate();
  if (s0.is_origin())
    throw input_error("seed state must not be the all-zero point");
  if (cfg.n0 < 256) throw input_error("n0 must be at least 256");

  ConstructionTrace trace;
  State2D seed = s0;
  long ctr = 0;
  long n = cfg.n0;
  for (long attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    const DrawResult draw = draw_candidate(params, seed, cfg.transient, n);
    if (!draw.complete) {
      ++ctr;  // Step 2: extend the draw budget and go again
      n = cfg.n0 + 100 * ctr;
      continue;
    }
    if (!structurally_strong(draw.table)) {
      ++ctr;  // Step 3: perturb the seed, x0 = (x0 + ctr*y0) mod 1
      n = cfg.n0 + 100 * ctr;
      seed.x = mod1(seed.x + static_cast<double>(ctr) * seed.y);
      ++trace.restarts;
      continue;
    }
    trace.ctr = ctr;
    trace.n_samples = n;
    trace.final_seed = seed;
    return {SBox(draw.table), trace};
  }
  throw construction_error("S-Box construction exhausted its retry budget");
}

std::string to_hex_grid(const SBox& s) {
  std::string out;
  out.reserve(256 * 3 + 16);
  char buf[4];
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      std::snprintf(buf, sizeof(buf), "%02X", s[static_cast<std::uint8_t>(16 * r + c)]);
      out += buf;
      out += (c == 15) ? '\n' : ' ';
    }
  }
  return out;
}

std::string to_json_list(const SBox& s) {
  std::string out = "[";
  for (int i = 0; i < 256; ++i) {
    out += std::to_string(static_cast<int>(s[static_cast<std::uint8_t>(i)]));
    if (i != 255) out += ", ";
  }
  out += "]\n";
  return out;
}

SBox parse_sbox_text(const std::string& text, std::string name) {
  std::vector<int> values;
  values.reserve(256);

  auto first_token = text.find_first_not_of(" \t\r\n");
  if (first_token == std::string::npos) throw input_error("empty S-Box input");

  if (text[first_token] == '[') {
    // JSON-style list of integers
    std::string token;
    for (std::size_t i = first_token + 1; i < text.size(); ++i) {
      const char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (c == ',' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
        if (!token.empty()) {
          values.push_back(std::stoi(token));
          token.clear();
        }
        if (c == ']') break;
      } else {
        throw input_error(std::string("unexpected character '") + c +
                          "' in S-Box list");
      }
    }
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok.size() != 2 || !std::isxdigit(static_cast<unsigned char>(tok[0])) ||
          !std::isxdigit(static_cast<unsigned char>(tok[1])))
        throw input_error("malformed hex token '" + tok +
                          "': expected two hex digits");
      values.push_back(std::stoi(tok, nullptr, 16));
    }
  }

  if (values.size() != 256)
    throw input_error("S-Box needs exactly 256 entries, got " +
                      std::to_string(values.size()));
  std::array<std::uint8_t, 256> table{};
  for (std::size_t i = 0; i < 256; ++i) {
    if (values[i] < 0 || values[i] > 255)
      throw input_error("S-Box entry out of byte range: " +
                        std::to_string(values[i]));
    table[i] = static_cast<std::uint8_t>(values[i]);
  }
  return SBox(table, std::move(name));  // duplicate check lives in SBox
}

std::string render_structural_report(const StructuralReport& report) {
  std::ostringstream out;
  char buf[8];
  auto hexlist = [&](const std::vector<std::uint8_t>& v) {
    if (v.empty()) return std::string("none");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%02X", v[i]);
      if (i) s += ' ';
      s += buf;
    }
    return s;
  };
  out << "fixed points: " << hexlist(report.fixed_points) << "\n";
  out << "reverse fixed points: " << hexlist(report.reverse_fixed_points) << "\n";
  out << "cycles (" << report.cycles.cycles.size() << "):\n";
  for (const auto& c : report.cycles.cycles) {
    out << "  length " << c.size() << ": ";
    if (c.size() <= 16) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%02X", c[i]);
        out << (i ? " -> " : "") << buf;
      }
      std::snprintf(buf, sizeof(buf), "%02X", c.front());
      out << " -> " << buf;
    } else {
      std::snprintf(buf, sizeof(buf), "%02X", c.front());
      out << buf << " -> ... (" << c.size() << " members)";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sboxkit
