#include "slt/clips.hpp"

#include <algorithm>
#include <cmath>

#include "slt/error.hpp"

namespace slt {

LandmarkStream downsample_frames(const LandmarkStream& stream, int stride) {
  if (stride < 1) throw ConfigError("frame stride must be >= 1");
  if (stride == 1) return stream;
  LandmarkStream out;
  out.fps = stream.fps / static_cast<float>(stride);
  out.dim = stream.dim;
  const std::size_t n = stream.n_frames();
  out.data.reserve(((n + stride - 1) / stride) * stream.dim);
  for (std::size_t i = 0; i < n; i += static_cast<std::size_t>(stride))
    out.data.insert(out.data.end(), stream.frame(i), stream.frame(i) + stream.dim);
  return out;
}

std::vector<Caption> covered_captions(const std::vector<Caption>& captions, double clip_start_s,
                                      double clip_end_s) {
  std::vector<Caption> out;
  for (const Caption& c : captions) {
    if (c.start_s > clip_end_s) break;  // sorted by start_s
    if (c.start_s >= clip_start_s && c.end_s <= clip_end_s) out.push_back(c);
  }
  return out;
}

namespace {

Clip extract(const CaptionedVideo& video, const ClipConfig& cfg, double start_s, double end_s) {
  Clip clip;
  clip.video_id = video.video_id;
  clip.clip_start_s = start_s;
  clip.clip_end_s = end_s;
  // Stride first, then window selection: frame i of the strided stream sits
  // at t = i / fps', kept iff start <= t < end, capped at max_frames.
  LandmarkStream storage;
  const LandmarkStream* src = &video.stream;
  if (cfg.frame_stride != 1) {
    storage = downsample_frames(video.stream, cfg.frame_stride);
    src = &storage;
  }
  const LandmarkStream& strided = *src;
  const double fps = strided.fps;
  const std::size_t n = strided.n_frames();
  std::size_t i_begin = static_cast<std::size_t>(std::max(0.0, std::ceil(start_s * fps - 1e-9)));
  std::size_t i_end = std::min(n, static_cast<std::size_t>(std::max(0.0, std::ceil(end_s * fps - 1e-9))));
  if (i_begin > i_end) i_begin = i_end;
  std::size_t count = i_end - i_begin;
  if (count > static_cast<std::size_t>(cfg.max_frames)) count = static_cast<std::size_t>(cfg.max_frames);
  clip.n_frames = count;
  clip.frames.assign(strided.frame(i_begin), strided.frame(i_begin) + count * strided.dim);
  clip.covered = covered_captions(video.captions, start_s, end_s);
  return clip;
}

}  // namespace

Clip sample_clip(const CaptionedVideo& video, const ClipConfig& cfg, Rng& rng) {
  if (video.stream.n_frames() == 0) throw EmptyVideo(video.video_id);
  const double duration = video.duration_s;
  const double span = std::min(cfg.clip_seconds, duration);
  Clip clip;
  for (int attempt = 0; attempt <= cfg.max_resample; ++attempt) {
    const double start = duration <= cfg.clip_seconds
                             ? 0.0
                             : rng.uniform(0.0, duration - cfg.clip_seconds);
    clip = extract(video, cfg, start, start + span);
    if (!clip.covered.empty()) return clip;
  }
  return clip;  // empty covered list is permitted after max_resample failures
}

Clip clip_at(const CaptionedVideo& video, const ClipConfig& cfg, double start_s, double end_s) {
  if (video.stream.n_frames() == 0) throw EmptyVideo(video.video_id);
  return extract(video, cfg, start_s, end_s);
}

}  // namespace slt
