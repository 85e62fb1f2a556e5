#pragma once

#include <vector>

#include "slt/corpus.hpp"
#include "slt/rng.hpp"

namespace slt {

struct ClipConfig {
  double clip_seconds = 34.0;
  int frame_stride = 2;
  int max_resample = 10;
  int max_frames = 512;  // post-stride cap on clip frame count
};

// A sampled training window. `frames` are post-stride; `covered` holds the
// captions fully inside [clip_start_s, clip_end_s] (closed on both ends),
// sorted by start time.
struct Clip {
  std::string video_id;
  double clip_start_s = 0.0;
  double clip_end_s = 0.0;
  std::vector<float> frames;  // n x 255
  std::size_t n_frames = 0;
  std::vector<Caption> covered;
};

// Keeps frames 0, stride, 2*stride, ...; fps becomes fps/stride.
LandmarkStream downsample_frames(const LandmarkStream& stream, int stride);

// Captions whose whole [start, end] interval lies inside the closed window.
// `captions` must be sorted by start_s.
std::vector<Caption> covered_captions(const std::vector<Caption>& captions, double clip_start_s,
                                      double clip_end_s);

// Uniform clip start in [0, max(0, duration - N)]; whole video when shorter
// than N. Resamples up to cfg.max_resample times when no caption is fully
// covered, then returns the last clip with an empty covered list.
Clip sample_clip(const CaptionedVideo& video, const ClipConfig& cfg, Rng& rng);

// Deterministic clip at a forced window (testing and segment extraction).
Clip clip_at(const CaptionedVideo& video, const ClipConfig& cfg, double start_s, double end_s);

}  // namespace slt
