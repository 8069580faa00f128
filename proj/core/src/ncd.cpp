#include "mqtc/ncd.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <lzma.h>
#include <mutex>
#include <set>
#include <thread>
#include <zlib.h>

#include "mqtc/error.hpp"

namespace mqtc {

ZlibCompressor::ZlibCompressor(int level) : level_(level) {
  if (level < 0 || level > 9) throw invalid_input_error("zlib level must be in 0..9");
}

std::size_t ZlibCompressor::compressed_length(ByteView data) const {
  uLongf size = compressBound(static_cast<uLong>(data.size()));
  Bytes out(size);
  const int rc = compress2(out.data(), &size, data.data(), static_cast<uLong>(data.size()), level_);
  if (rc != Z_OK) throw error("zlib compression failed with code " + std::to_string(rc));
  return size;
}

std::string ZlibCompressor::name() const { return "zlib-" + std::to_string(level_); }

LzmaCompressor::LzmaCompressor(std::uint32_t preset) : preset_(preset) {
  if (preset > 9) throw invalid_input_error("lzma preset must be in 0..9");
}

std::size_t LzmaCompressor::compressed_length(ByteView data) const {
  Bytes out(lzma_stream_buffer_bound(data.size()));
  std::size_t size = 0;
  const lzma_ret rc = lzma_easy_buffer_encode(preset_, LZMA_CHECK_NONE, nullptr, data.data(),
                                              data.size(), out.data(), &size, out.size());
  if (rc != LZMA_OK) throw error("lzma compression failed with code " + std::to_string(rc));
  return size;
}

std::string LzmaCompressor::name() const { return "lzma-" + std::to_string(preset_); }

std::unique_ptr<Compressor> make_compressor(std::string_view name) {
  if (name == "zlib") return std::make_unique<ZlibCompressor>();
  if (name == "lzma") return std::make_unique<LzmaCompressor>();
  throw invalid_input_error("unknown compressor '" + std::string(name) + "'");
}

namespace {

double ncd_with(ByteView x, ByteView y, std::size_t zx, std::size_t zy, const Compressor& z) {
  Bytes xy;
  xy.reserve(x.size() + y.size());
  xy.insert(xy.end(), x.begin(), x.end());
  xy.insert(xy.end(), y.begin(), y.end());
  const double zxy = static_cast<double>(z.compressed_length(xy));
  return (zxy - static_cast<double>(std::min(zx, zy))) / static_cast<double>(std::max(zx, zy));
}

}  // namespace

double ncd(ByteView x, ByteView y, const Compressor& z) {
  if (x.empty() || y.empty()) throw invalid_input_error("ncd of an empty byte string");
  return ncd_with(x, y, z.compressed_length(x), z.compressed_length(y), z);
}

DistanceMatrix ncd_matrix(std::span<const CorpusItem> items, const Compressor& z,
                          const NcdMatrixOptions& options) {
  const std::size_t n = items.size();
  if (n < 4) {
    throw invalid_corpus_error("a corpus needs at least 4 items, got " + std::to_string(n));
  }
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (!seen.insert(item.name).second) {
      throw invalid_corpus_error("duplicate corpus item name '" + item.name + "'");
    }
    if (item.bytes.empty()) throw invalid_corpus_error("corpus item '" + item.name + "' is empty");
  }

  std::vector<std::size_t> single(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> values(n * n, 0.0);

  // Each task writes its own slot, so completion order does not matter.
  auto parallel = [&](std::size_t count, const std::function<void(std::size_t)>& task) {
    const auto threads = static_cast<std::size_t>(std::max(1, options.threads));
    if (threads == 1 || count < 2) {
      for (std::size_t t = 0; t < count; ++t) task(t);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(threads, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t t; (t = next.fetch_add(1)) < count;) {
          try {
            task(t);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  };

  parallel(n, [&](std::size_t i) { single[i] = z.compressed_length(items[i].bytes); });
  parallel(pairs.size(), [&](std::size_t t) {
    const auto [i, j] = pairs[t];
    const double ij = ncd_with(items[i].bytes, items[j].bytes, single[i], single[j], z);
    const double ji = ncd_with(items[j].bytes, items[i].bytes, single[j], single[i], z);
    values[i * n + j] = std::min(ij, ji);
  });

  std::vector<std::string> names;
  for (const auto& item : items) names.push_back(item.name);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double& v = values[i * n + j];
      if (v < 0.0) {
        if (options.on_warning) {
          options.on_warning("negative NCD " + std::to_string(v) + " between '" + names[i] +
                             "' and '" + names[j] + "' clamped to 0");
        }
        v = 0.0;
      }
      values[j * n + i] = v;
    }
  }
  return DistanceMatrix(n, std::move(values), std::move(names));
}

Bytes read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_corpus_error("cannot read " + path.string());
  Bytes out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw invalid_corpus_error("error while reading " + path.string());
  return out;
}

std::vector<CorpusItem> load_corpus_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw invalid_corpus_error("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  std::vector<CorpusItem> items;
  for (const auto& f : files) items.push_back({f.filename().string(), read_file_bytes(f)});
  return items;
}

std::vector<CorpusItem> load_corpus_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw invalid_corpus_error("cannot read manifest " + manifest.string());
  const auto base = manifest.parent_path();
  std::vector<CorpusItem> items;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::string name;
    std::string path_text = line;
    if (const auto tab = line.find('\t'); tab != std::string::npos) {
      name = line.substr(0, tab);
      path_text = line.substr(tab + 1);
    }
    std::filesystem::path p(path_text);
    if (p.is_relative()) p = base / p;
    if (name.empty()) name = p.filename().string();
    items.push_back({std::move(name), read_file_bytes(p)});
  }
  return items;
}

std::vector<CorpusItem> load_corpus(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) return load_corpus_directory(path);
  if (std::filesystem::is_regular_file(path)) return load_corpus_manifest(path);
  throw invalid_corpus_error("corpus path " + path.string() + " does not exist");
}

}  // namespace mqtc
