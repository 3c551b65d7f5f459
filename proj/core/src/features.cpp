// Copyright 2026 The posebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posebench/features.hpp"

#include <bit>
#include <charconv>
#include <cstring>

#include "posebench/error.hpp"
#include "posebench/manifest_io.hpp"

namespace posebench {
namespace {

constexpr std::string_view kMagic = "PBFEAT01";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
void put_le(std::string& out, T value) {
  static_assert(std::endian::native == std::endian::little, "little-endian host required");
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    if (bytes_.size() - pos_ < sizeof(T)) throw ParseError("feature file truncated at byte " + std::to_string(pos_));
    T v;
    std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }

  std::string_view take(std::size_t n) {
    if (bytes_.size() - pos_ < n) throw ParseError("feature file truncated at byte " + std::to_string(pos_));
    auto s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<FrameFeature> parse_features_csv(std::string_view text) {
  std::vector<FrameFeature> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool first_row = true;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto fields = split_csv(line);
    if (first_row && fields.front() == "id") {
      first_row = false;
      continue;
    }
    first_row = false;
    FrameFeature f;
    f.id = std::string(fields.front());
    if (f.id.empty()) throw ParseError("features line " + std::to_string(line_no) + ": empty id");
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      auto [p, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), v);
      if (ec != std::errc() || p != fields[i].data() + fields[i].size()) {
        throw ParseError("features line " + std::to_string(line_no) + ", column " +
                         std::to_string(i + 1) + ": not a number: '" + std::string(fields[i]) + "'");
      }
      f.values.push_back(v);
    }
    if (!out.empty() && f.values.size() != out.front().values.size()) {
      throw ParseError("features line " + std::to_string(line_no) + ": expected " +
                       std::to_string(out.front().values.size()) + " values, got " +
                       std::to_string(f.values.size()));
    }
    out.push_back(std::move(f));
    if (end == text.size()) break;
  }
  return out;
}

std::string emit_features_csv(std::span<const FrameFeature> features) {
  std::string out;
  char buf[64];
  for (const auto& f : features) {
    out += f.id;
    for (double v : f.values) {
      auto res = std::to_chars(buf, buf + sizeof(buf), v);
      out += ',';
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

std::vector<FrameFeature> parse_features_binary(std::string_view bytes) {
  ByteReader r(bytes);
  if (r.take(kMagic.size()) != kMagic) throw ParseError("not a feature file (bad magic)");
  const auto rows = r.get<std::uint64_t>();
  const auto dim = r.get<std::uint64_t>();
  // Each row needs at least 4 + 8 * dim bytes; reject absurd headers early.
  if (dim > bytes.size() || rows > bytes.size()) throw ParseError("feature file header is inconsistent");
  std::vector<FrameFeature> out;
  out.reserve(rows);
  for (std::uint64_t i = 0; i < rows; ++i) {
    FrameFeature f;
    const auto len = r.get<std::uint32_t>();
    f.id = std::string(r.take(len));
    f.values.resize(dim);
    for (auto& v : f.values) v = r.get<double>();
    out.push_back(std::move(f));
  }
  if (!r.done()) throw ParseError("trailing bytes after feature rows");
  return out;
}

std::string emit_features_binary(std::span<const FrameFeature> features) {
  const std::uint64_t dim = features.empty() ? 0 : features.front().values.size();
  std::string out(kMagic);
  put_le<std::uint64_t>(out, features.size());
  put_le<std::uint64_t>(out, dim);
  for (const auto& f : features) {
    if (f.values.size() != dim) throw DomainError("feature '" + f.id + "' has a different dimension");
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(f.id.size()));
    out += f.id;
    for (double v : f.values) put_le<double>(out, v);
  }
  return out;
}

std::vector<FrameFeature> load_features(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  if (bytes.compare(0, kMagic.size(), kMagic) == 0) return parse_features_binary(bytes);
  return parse_features_csv(bytes);
}

std::vector<double> downsample_grayscale(std::span<const std::uint8_t> pixels, std::size_t width,
                                         std::size_t height, std::size_t out_width,
                                         std::size_t out_height) {
  if (pixels.size() != width * height) throw DomainError("pixel buffer does not match width x height");
  if (out_width == 0 || out_height == 0 || out_width > width || out_height > height) {
    throw DomainError("output size must be non-zero and no larger than the input");
  }
  std::vector<double> out(out_width * out_height);
  for (std::size_t oy = 0; oy < out_height; ++oy) {
    const std::size_t y0 = oy * height / out_height;
    const std::size_t y1 = (oy + 1) * height / out_height;
    for (std::size_t ox = 0; ox < out_width; ++ox) {
      const std::size_t x0 = ox * width / out_width;
      const std::size_t x1 = (ox + 1) * width / out_width;
      std::uint64_t sum = 0;
      for (std::size_t y = y0; y < y1; ++y) {
        for (std::size_t x = x0; x < x1; ++x) sum += pixels[y * width + x];
      }
      const double count = static_cast<double>((y1 - y0) * (x1 - x0));
      out[oy * out_width + ox] = static_cast<double>(sum) / (255.0 * count);
    }
  }
  return out;
}

}  // namespace posebench
