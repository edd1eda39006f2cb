#include "vpt/benderwu.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "vpt/errors.hpp"

namespace vpt {

namespace {

const ExactRational kZero(0);

constexpr std::string_view kHeaderPrefix = "bw-series v1 order=";
constexpr std::string_view kChecksumPrefix = "checksum=";

std::string hex64(std::uint64_t v) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = kHex[v & 0xF];
    v >>= 4;
  }
  return s;
}

int parse_index(std::string_view text, std::string_view what) {
  int value = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw DomainError("malformed cache: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

BWSeries::BWSeries(std::vector<ExactRational> coefficients) : coefficients_(std::move(coefficients)) {}

BWSeries BWSeries::truncated(int order) const {
  if (order < 0 || order > max_order()) {
    throw DomainError("requested order " + std::to_string(order) + " exceeds series order " +
                      std::to_string(max_order()));
  }
  return BWSeries({coefficients_.begin(), coefficients_.begin() + order + 1});
}

void BWSeries::validate() const {
  if (coefficients_.empty()) throw DomainError("invariant violation: empty series");
  if (coefficients_[0] != ExactRational(1, 2)) throw DomainError("invariant violation: e_0 != 1/2");
  for (std::size_t l = 1; l < coefficients_.size(); ++l) {
    const int expected = (l % 2 == 1) ? 1 : -1;
    if (sgn(coefficients_[l]) != expected) {
      throw DomainError("invariant violation: sign of e_" + std::to_string(l));
    }
  }
}

const ExactRational& BWWorkspace::at(int n, int k) const {
  if (n < 0 || k < 0 || k > 2 * n) return kZero;
  return wave[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BWWorkspace run_recursion(int max_order) {
  if (max_order < 0) throw DomainError("order must be non-negative");
  BWWorkspace ws;
  ws.wave.reserve(static_cast<std::size_t>(max_order) + 1);
  ws.wave.push_back({ExactRational(1)});
  ws.energy.push_back(ExactRational(1, 2));
  const ExactRational quarter(1, 4);

  for (int n = 1; n <= max_order; ++n) {
    ws.wave.emplace_back(static_cast<std::size_t>(2 * n) + 1);
    auto& row = ws.wave.back();
    ExactRational acc;
    ExactRational term;
    // Downward sweep: B[n][k] needs B[n][k+1] from this order.
    for (int k = 2 * n; k >= 1; --k) {
      acc = 0;
      if (k + 1 <= 2 * n) acc = (2 * k + 2) * (2 * k + 1) * row[static_cast<std::size_t>(k + 1)];
      acc -= quarter * ws.at(n - 1, k - 2);
      // B[n-m][k] vanishes unless k <= 2(n-m).
      for (int m = 1; m <= n - (k + 1) / 2; ++m) {
        term = ws.energy[static_cast<std::size_t>(m)] * ws.wave[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(k)];
        acc += term;
      }
      acc /= 2 * k;
      row[static_cast<std::size_t>(k)] = acc;
    }
    ws.energy.push_back(-2 * row[1]);
  }
  return ws;
}

BWSeries generate(int max_order) { return BWSeries(run_recursion(max_order).energy); }

bool verify_head(const BWSeries& series) {
  if (series.max_order() < 4) throw DomainError("verify_head needs at least order 4");
  static const ExactRational kHead[] = {ExactRational(1, 2), ExactRational(3, 4), ExactRational(-21, 8),
                                        ExactRational(333, 16), ExactRational(-30885, 128)};
  for (int l = 0; l < 5; ++l) {
    if (series[l] != kHead[l]) return false;
  }
  return true;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string render_cache(const BWSeries& series) {
  std::string data;
  for (int l = 0; l <= series.max_order(); ++l) {
    data += std::to_string(l);
    data += ' ';
    data += to_string(series[l]);
    data += '\n';
  }
  std::string out(kHeaderPrefix);
  out += std::to_string(series.max_order()) + "\n";
  out += data;
  out += std::string(kChecksumPrefix) + hex64(fnv1a64(data)) + "\n";
  return out;
}

BWSeries parse_cache(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty() || lines[0].substr(0, kHeaderPrefix.size()) != kHeaderPrefix) {
    throw DomainError("malformed cache: wrong header");
  }
  const int order = parse_index(lines[0].substr(kHeaderPrefix.size()), "order");

  std::vector<ExactRational> coefficients;
  std::string data;
  std::size_t i = 1;
  for (; i < lines.size() && lines[i].substr(0, kChecksumPrefix.size()) != kChecksumPrefix; ++i) {
    const std::string_view line = lines[i];
    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw DomainError("malformed cache line: '" + std::string(line) + "'");
    const int l = parse_index(line.substr(0, space), "index");
    if (l != static_cast<int>(coefficients.size())) throw DomainError("malformed cache: index out of sequence");
    coefficients.push_back(parse_rational(line.substr(space + 1)));
    data.append(line);
    data += '\n';
  }
  if (static_cast<int>(coefficients.size()) < order + 1) throw DomainError("truncated cache");
  if (static_cast<int>(coefficients.size()) > order + 1) throw DomainError("malformed cache: too many lines");

  BWSeries series(std::move(coefficients));
  series.validate();

  if (i >= lines.size()) throw DomainError("truncated cache: missing checksum");
  if (lines[i].substr(kChecksumPrefix.size()) != hex64(fnv1a64(data))) {
    throw DomainError("checksum mismatch");
  }
  return series;
}

void save_cache(const BWSeries& series, const std::filesystem::path& path) {
  series.validate();
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write cache file " + path.string());
  out << render_cache(series);
  if (!out) throw IoError("error writing cache file " + path.string());
}

BWSeries load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cache file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cache(buffer.str());
}

}  // namespace vpt
