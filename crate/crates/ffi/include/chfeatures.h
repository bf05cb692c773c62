#ifndef CHFEATURES_H
#define CHFEATURES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Number of slots in [`ChfFeaturePoints`]: twelve corners and nostrils, then
 * the nose tip.
 */
#define CHF_POINT_COUNT 13

/**
 * Slot of the nose tip in [`ChfFeaturePoints::points`].
 */
#define CHF_NOSE_TIP 12

typedef enum ChfStatus {
  CHF_STATUS_OK = 0,
  CHF_STATUS_NULL_POINTER,
  CHF_STATUS_INVALID_ARGUMENT,
  /**
   * PGM bytes could not be decoded.
   */
  CHF_STATUS_PARSE,
  /**
   * A rectangle or point lies outside the image.
   */
  CHF_STATUS_BOUNDS,
  /**
   * A threshold outside (0, 1].
   */
  CHF_STATUS_THRESHOLD,
  /**
   * The face is too small for the region layout.
   */
  CHF_STATUS_LAYOUT,
  /**
   * A caller buffer is too small; the required size was written back.
   */
  CHF_STATUS_BUFFER_TOO_SMALL,
  /**
   * A bug: the library panicked.
   */
  CHF_STATUS_INTERNAL,
} ChfStatus;

typedef enum ChfRegion {
  CHF_REGION_EYEBROW_RIGHT = 0,
  CHF_REGION_EYEBROW_LEFT,
  CHF_REGION_EYE_RIGHT,
  CHF_REGION_EYE_LEFT,
  CHF_REGION_NOSE,
  CHF_REGION_MOUTH,
} ChfRegion;

/**
 * Opaque detector configuration: per-region thresholds plus the default
 * layout and options.
 */
typedef struct ChfDetector ChfDetector;

/**
 * Opaque 8-bit grayscale image.
 */
typedef struct ChfImage ChfImage;

typedef struct ChfRect {
  uint32_t x;
  uint32_t y;
  uint32_t width;
  uint32_t height;
} ChfRect;

/**
 * A pixel position; both coordinates are -1 when the point is absent.
 */
typedef struct ChfPoint {
  int32_t x;
  int32_t y;
} ChfPoint;

/**
 * Detected points in image coordinates. Slot order follows
 * [`chf_point_name`]; `count` is the number of present slots.
 */
typedef struct ChfFeaturePoints {
  struct ChfPoint points[CHF_POINT_COUNT];
  uint32_t count;
} ChfFeaturePoints;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Decode a binary (P5) or plain (P2) PGM from `len` bytes at `data`.
 *
 * # Safety
 * `data` must point to `len` readable bytes and `out` to writable storage
 * for one pointer.
 */
enum ChfStatus chf_image_from_pgm(const uint8_t *data, size_t len, struct ChfImage **out);

/**
 * Create a `width` x `height` image from row-major pixels, or a black
 * image when `pixels` is null.
 *
 * # Safety
 * A non-null `pixels` must point to `width * height` readable bytes;
 * `out` must be writable.
 */
enum ChfStatus chf_image_new(uint32_t width,
                             uint32_t height,
                             const uint8_t *pixels,
                             struct ChfImage **out);

/**
 * Width in pixels; 0 for a null handle.
 *
 * # Safety
 * `img` must be null or a live handle.
 */
uint32_t chf_image_width(const struct ChfImage *img);

/**
 * Height in pixels; 0 for a null handle.
 *
 * # Safety
 * `img` must be null or a live handle.
 */
uint32_t chf_image_height(const struct ChfImage *img);

/**
 * Row-major pixels, valid until the handle is freed; null for a null handle.
 *
 * # Safety
 * `img` must be null or a live handle.
 */
const uint8_t *chf_image_pixels(const struct ChfImage *img);

/**
 * Encode as binary PGM into `buf`. The encoded size is always written to
 * `written`; when it exceeds `cap` nothing else is written and
 * `BufferTooSmall` is returned, so a call with `cap == 0` queries the size.
 *
 * # Safety
 * `buf` must point to `cap` writable bytes (it may be null when `cap` is
 * 0); `img` and `written` must be valid.
 */
enum ChfStatus chf_image_to_pgm(const struct ChfImage *img,
                                uint8_t *buf,
                                size_t cap,
                                size_t *written);

/**
 * # Safety
 * `img` must be null or a handle from this library not yet freed.
 */
void chf_image_free(struct ChfImage *img);

/**
 * Detector with the default thresholds and layout.
 *
 * # Safety
 * `out` must be writable.
 */
enum ChfStatus chf_detector_new(struct ChfDetector **out);

/**
 * Set the threshold of one region; it must lie in (0, 1].
 *
 * # Safety
 * `det` must be a live handle.
 */
enum ChfStatus chf_detector_set_threshold(struct ChfDetector *det,
                                          enum ChfRegion region,
                                          double th);

/**
 * Threshold of one region; NaN for a null handle.
 *
 * # Safety
 * `det` must be null or a live handle.
 */
double chf_detector_threshold(const struct ChfDetector *det, enum ChfRegion region);

/**
 * Pixels the nose tip sits above the higher nostril (default 8).
 *
 * # Safety
 * `det` must be a live handle.
 */
enum ChfStatus chf_detector_set_nose_tip_offset(struct ChfDetector *det, uint32_t offset);

/**
 * # Safety
 * `det` must be null or a handle from this library not yet freed.
 */
void chf_detector_free(struct ChfDetector *det);

/**
 * Detect feature points inside `face` (the whole image when null). Points
 * are written to `out` in image coordinates. A face in which nothing was
 * found is still `Ok`, with `count == 0`.
 *
 * # Safety
 * `det`, `img` and `out` must be valid; `face` may be null.
 */
enum ChfStatus chf_detect(const struct ChfDetector *det,
                          const struct ChfImage *img,
                          const struct ChfRect *face,
                          struct ChfFeaturePoints *out);

/**
 * Copy of `img` with a plus at every present point and a disc at the nose
 * tip, returned as a new handle.
 *
 * # Safety
 * `img`, `points` and `out` must be valid.
 */
enum ChfStatus chf_draw_markers(const struct ChfImage *img,
                                const struct ChfFeaturePoints *points,
                                struct ChfImage **out);

/**
 * Name of a point slot, e.g. "eye_left_outer" or "nose_tip"; null when
 * `index` is out of range. The string is static.
 */
const char *chf_point_name(size_t index);

/**
 * Static description of a status code.
 */
const char *chf_status_str(enum ChfStatus status);

/**
 * Message of the last failure on this thread, or null when no call has
 * failed yet. Valid until the next failing call on the same thread.
 */
const char *chf_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHFEATURES_H */
