#include "slt/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "slt/error.hpp"

namespace slt {

using nlohmann::json;

namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

template <typename T>
void read_raw(std::ifstream& in, T* dst, std::size_t count, const std::string& path) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(sizeof(T) * count));
  if (static_cast<std::size_t>(in.gcount()) != sizeof(T) * count) throw TruncatedFile(path);
}

template <typename T>
void write_raw(std::ofstream& out, const T* src, std::size_t count) {
  out.write(reinterpret_cast<const char*>(src), static_cast<std::streamsize>(sizeof(T) * count));
}

}  // namespace

std::vector<Caption> load_captions(const std::string& path) {
  auto in = open_in(path);
  std::vector<Caption> captions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) throw MalformedLine(path, line_no, "invalid JSON");
    if (!obj.contains("start_s") || !obj.contains("end_s") || !obj.contains("text") ||
        !obj.contains("lang"))
      throw MalformedLine(path, line_no, "missing field");
    Caption c;
    try {
      c.start_s = obj.at("start_s").get<double>();
      c.end_s = obj.at("end_s").get<double>();
      c.text = obj.at("text").get<std::string>();
      c.lang = obj.at("lang").get<std::string>();
      c.augmented = obj.value("augmented", false);
    } catch (const json::exception& e) {
      throw MalformedLine(path, line_no, e.what());
    }
    if (!(c.start_s < c.end_s)) throw IntervalError(c.start_s, c.end_s);
    if (c.start_s < 0.0) throw MalformedLine(path, line_no, "negative start_s");
    if (blank(c.text)) throw MalformedLine(path, line_no, "empty caption text");
    captions.push_back(std::move(c));
  }
  std::stable_sort(captions.begin(), captions.end(),
                   [](const Caption& a, const Caption& b) { return a.start_s < b.start_s; });
  return captions;
}

void save_captions(const std::string& path, const std::vector<Caption>& captions) {
  auto out = open_out(path);
  for (const Caption& c : captions) {
    json obj;
    obj["start_s"] = c.start_s;
    obj["end_s"] = c.end_s;
    obj["text"] = c.text;
    obj["lang"] = c.lang;
    if (c.augmented) obj["augmented"] = true;
    out << obj.dump() << "\n";
  }
}

LandmarkStream load_landmarks(const std::string& path) {
  auto in = open_in(path, std::ios::in | std::ios::binary);
  char magic[4];
  read_raw(in, magic, 4, path);
  if (std::memcmp(magic, "SLMK", 4) != 0) throw DataError("bad magic in " + path);
  std::uint32_t version = 0, dim = 0, n_frames = 0;
  float fps = 0.0f;
  read_raw(in, &version, 1, path);
  if (version != 1) throw DataError("unsupported landmark file version in " + path);
  read_raw(in, &fps, 1, path);
  read_raw(in, &dim, 1, path);
  read_raw(in, &n_frames, 1, path);
  if (dim != static_cast<std::uint32_t>(kLandmarkDim)) throw DimMismatch(dim);
  if (!(fps > 0.0f)) throw DataError("non-positive fps in " + path);
  LandmarkStream stream;
  stream.fps = fps;
  stream.dim = static_cast<int>(dim);
  stream.data.resize(static_cast<std::size_t>(n_frames) * dim);
  read_raw(in, stream.data.data(), stream.data.size(), path);
  in.peek();
  if (!in.eof()) throw TruncatedFile(path);  // trailing bytes: length disagrees with header
  for (float v : stream.data)
    if (!std::isfinite(v)) throw DataError("non-finite landmark value in " + path);
  return stream;
}

void save_landmarks(const std::string& path, const LandmarkStream& stream) {
  if (stream.dim != kLandmarkDim) throw DimMismatch(static_cast<std::size_t>(stream.dim));
  auto out = open_out(path, std::ios::out | std::ios::binary);
  const std::uint32_t version = 1;
  const std::uint32_t dim = static_cast<std::uint32_t>(stream.dim);
  const std::uint32_t n_frames = static_cast<std::uint32_t>(stream.n_frames());
  out.write("SLMK", 4);
  write_raw(out, &version, 1);
  write_raw(out, &stream.fps, 1);
  write_raw(out, &dim, 1);
  write_raw(out, &n_frames, 1);
  write_raw(out, stream.data.data(), stream.data.size());
}

std::vector<MtPair> load_mt_corpus(const std::string& path, const std::string& src_lang,
                                   const std::string& tgt_lang) {
  auto in = open_in(path);
  std::vector<MtPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw MalformedLine(path, line_no, "expected exactly two tab-separated columns");
    MtPair p;
    p.src_text = line.substr(0, tab);
    p.tgt_text = line.substr(tab + 1);
    if (p.src_text.empty() || p.tgt_text.empty())
      throw MalformedLine(path, line_no, "empty column");
    p.src_lang = src_lang;
    p.tgt_lang = tgt_lang;
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void save_mt_corpus(const std::string& path, const std::vector<MtPair>& pairs) {
  auto out = open_out(path);
  for (const MtPair& p : pairs) out << p.src_text << "\t" << p.tgt_text << "\n";
}

CorpusManifest load_manifest(const std::string& path) {
  auto in = open_in(path);
  json obj;
  try {
    in >> obj;
  } catch (const json::exception& e) {
    throw DataError("manifest " + path + ": " + e.what());
  }
  CorpusManifest m;
  try {
    for (const auto& v : obj.at("videos")) {
      VideoEntry e;
      e.id = v.at("id").get<std::string>();
      e.sign_lang = v.at("sign_lang").get<std::string>();
      e.duration_s = v.at("duration_s").get<double>();
      e.split = v.at("split").get<std::string>();
      m.videos.push_back(std::move(e));
    }
    for (const auto& s : obj.value("mt_shards", json::array())) {
      MtShardEntry e;
      e.src = s.at("src").get<std::string>();
      e.tgt = s.at("tgt").get<std::string>();
      e.path = s.at("path").get<std::string>();
      e.count = s.at("count").get<std::size_t>();
      m.mt_shards.push_back(std::move(e));
    }
    for (const auto& [lang, dur] : obj.at("lang_duration_s").items())
      m.lang_duration_s[lang] = dur.get<double>();
  } catch (const json::exception& e) {
    throw DataError("manifest " + path + ": " + e.what());
  }
  std::sort(m.videos.begin(), m.videos.end(),
            [](const VideoEntry& a, const VideoEntry& b) { return a.id < b.id; });
  validate_manifest(m);
  return m;
}

void save_manifest(const std::string& path, const CorpusManifest& manifest) {
  CorpusManifest sorted = manifest;
  std::sort(sorted.videos.begin(), sorted.videos.end(),
            [](const VideoEntry& a, const VideoEntry& b) { return a.id < b.id; });
  validate_manifest(sorted);
  json obj;
  obj["videos"] = json::array();
  for (const VideoEntry& e : sorted.videos)
    obj["videos"].push_back(
        {{"id", e.id}, {"sign_lang", e.sign_lang}, {"duration_s", e.duration_s}, {"split", e.split}});
  obj["mt_shards"] = json::array();
  for (const MtShardEntry& e : sorted.mt_shards)
    obj["mt_shards"].push_back({{"src", e.src}, {"tgt", e.tgt}, {"path", e.path}, {"count", e.count}});
  obj["lang_duration_s"] = sorted.lang_duration_s;
  auto out = open_out(path);
  out << obj.dump(2) << "\n";
}

void validate_manifest(const CorpusManifest& manifest) {
  std::map<std::string, double> sums;
  for (const VideoEntry& e : manifest.videos) sums[e.sign_lang] += e.duration_s;
  for (const auto& [lang, total] : manifest.lang_duration_s) {
    const double sum = sums.count(lang) ? sums.at(lang) : 0.0;
    if (std::abs(sum - total) > 1e-6)
      throw DataError("manifest duration total for " + lang + " is " + std::to_string(total) +
                      ", member sum is " + std::to_string(sum));
  }
  for (const auto& [lang, sum] : sums)
    if (!manifest.lang_duration_s.count(lang))
      throw DataError("manifest missing duration total for " + lang);
}

CaptionedVideo load_video(const std::string& video_dir, const VideoEntry& entry) {
  CaptionedVideo v;
  v.video_id = entry.id;
  v.sign_lang = entry.sign_lang;
  v.stream = load_landmarks(video_dir + "/" + entry.id + ".lmk");
  v.captions = load_captions(video_dir + "/" + entry.id + ".captions.jsonl");
  v.duration_s = v.stream.duration_s();
  if (std::abs(v.duration_s - entry.duration_s) > 0.5)
    throw DataError("video " + entry.id + ": stream duration " + std::to_string(v.duration_s) +
                    " disagrees with declared " + std::to_string(entry.duration_s));
  for (const Caption& c : v.captions)
    if (c.start_s < 0.0 || c.end_s > v.duration_s + 1e-9)
      throw DataError("video " + entry.id + ": caption outside [0, duration]");
  return v;
}

void save_video(const std::string& video_dir, const CaptionedVideo& video) {
  save_landmarks(video_dir + "/" + video.video_id + ".lmk", video.stream);
  save_captions(video_dir + "/" + video.video_id + ".captions.jsonl", video.captions);
}

}  // namespace slt
