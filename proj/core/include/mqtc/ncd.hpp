#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mqtc/distance_matrix.hpp"

namespace mqtc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Compressed length in bytes. Implementations are deterministic and safe to
/// call from several threads at once.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual std::size_t compressed_length(ByteView data) const = 0;
  virtual std::string name() const = 0;
};

/// Deflate via zlib (raw zlib stream, default level 9).
class ZlibCompressor final : public Compressor {
 public:
  explicit ZlibCompressor(int level = 9);
  std::size_t compressed_length(ByteView data) const override;
  std::string name() const override;

 private:
  int level_;
};

/// LZMA2 via liblzma (.xz container, preset 9).
class LzmaCompressor final : public Compressor {
 public:
  explicit LzmaCompressor(std::uint32_t preset = 9);
  std::size_t compressed_length(ByteView data) const override;
  std::string name() const override;

 private:
  std::uint32_t preset_;
};

/// "zlib" (default) or "lzma"; throws invalid_input_error otherwise.
std::unique_ptr<Compressor> make_compressor(std::string_view name);

/// (Z(xy) - min(Z(x), Z(y))) / max(Z(x), Z(y)) with raw concatenation.
/// Not clamped. Throws invalid_input_error if either input is empty.
double ncd(ByteView x, ByteView y, const Compressor& z);

struct CorpusItem {
  std::string name;
  Bytes bytes;
};

struct NcdMatrixOptions {
  int threads = 1;
  /// Receives one message per negative entry clamped to zero.
  std::function<void(const std::string&)> on_warning;
};

/// Entry (i, j) is min(ncd(i, j), ncd(j, i)) clamped at zero; the diagonal
/// is zero. Needs at least four items with distinct names and nonempty
/// contents (invalid_corpus_error otherwise). The result does not depend on
/// the thread count.
DistanceMatrix ncd_matrix(std::span<const CorpusItem> items, const Compressor& z,
                          const NcdMatrixOptions& options = {});

/// Every regular file of a directory, sorted by file name; the name is the
/// file name.
std::vector<CorpusItem> load_corpus_directory(const std::filesystem::path& dir);

/// A text file listing one path per line (relative paths are resolved
/// against the manifest's directory; blank lines and lines starting with '#'
/// are skipped). An optional name may precede the path, separated by a tab;
/// otherwise the file name is used.
std::vector<CorpusItem> load_corpus_manifest(const std::filesystem::path& manifest);

/// Directory or manifest, by the kind of path.
std::vector<CorpusItem> load_corpus(const std::filesystem::path& path);

Bytes read_file_bytes(const std::filesystem::path& path);

}  // namespace mqtc
