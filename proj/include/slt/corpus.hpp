#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace slt {

inline constexpr int kLandmarkDim = 255;

// One timestamped caption. `augmented` marks text produced by an MT oracle
// rather than read from source data.
struct Caption {
  double start_s = 0.0;
  double end_s = 0.0;
  std::string text;
  std::string lang;
  bool augmented = false;
};

// Fixed-width landmark frames, frame-major.
struct LandmarkStream {
  float fps = 0.0f;
  int dim = kLandmarkDim;
  std::vector<float> data;  // n_frames x dim

  std::size_t n_frames() const { return dim > 0 ? data.size() / dim : 0; }
  const float* frame(std::size_t i) const { return data.data() + i * static_cast<std::size_t>(dim); }
  float* frame(std::size_t i) { return data.data() + i * static_cast<std::size_t>(dim); }
  double duration_s() const { return fps > 0 ? static_cast<double>(n_frames()) / fps : 0.0; }
};

// A landmark stream plus its timestamped captions; the unit of SLT data.
struct CaptionedVideo {
  std::string video_id;
  std::string sign_lang;
  LandmarkStream stream;
  std::vector<Caption> captions;  // sorted by start_s
  double duration_s = 0.0;
};

struct MtPair {
  std::string src_text;
  std::string tgt_text;
  std::string src_lang;
  std::string tgt_lang;
};

struct VideoEntry {
  std::string id;
  std::string sign_lang;
  double duration_s = 0.0;
  std::string split;  // train | dev | test | ft
};

struct MtShardEntry {
  std::string src;
  std::string tgt;
  std::string path;  // relative to corpus root
  std::size_t count = 0;
};

struct CorpusManifest {
  std::vector<VideoEntry> videos;  // sorted by id
  std::vector<MtShardEntry> mt_shards;
  std::map<std::string, double> lang_duration_s;  // per sign language, all listed videos
};

// --- caption files: JSON lines, one object per caption ---
std::vector<Caption> load_captions(const std::string& path);
void save_captions(const std::string& path, const std::vector<Caption>& captions);

// --- landmark files: "SLMK" u32=1 f32-fps u32-dim u32-nframes, f32 body ---
LandmarkStream load_landmarks(const std::string& path);
void save_landmarks(const std::string& path, const LandmarkStream& stream);

// --- MT corpora: UTF-8 TSV src<TAB>tgt ---
std::vector<MtPair> load_mt_corpus(const std::string& path, const std::string& src_lang,
                                   const std::string& tgt_lang);
void save_mt_corpus(const std::string& path, const std::vector<MtPair>& pairs);

// --- manifest ---
CorpusManifest load_manifest(const std::string& path);
void save_manifest(const std::string& path, const CorpusManifest& manifest);

// Loads <id>.captions.jsonl + <id>.lmk from `video_dir`, validates stream and
// caption invariants, and cross-checks the manifest's declared duration
// (advisory, 0.5 s tolerance). The header-derived duration is authoritative.
CaptionedVideo load_video(const std::string& video_dir, const VideoEntry& entry);
void save_video(const std::string& video_dir, const CaptionedVideo& video);

// Throws DataError unless per-language totals equal member-video sums to 1e-6 s.
void validate_manifest(const CorpusManifest& manifest);

}  // namespace slt
