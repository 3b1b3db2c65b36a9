#pragma once

#include "microgrid/series.hpp"

namespace microgrid {

/// Causal moving-average split of the hourly deficit. The filtered (low
/// frequency) component goes to the flow battery, the residual to the LIB.
struct ControllerParams {
    /// Window span in hours; fractional spans weight the oldest sample.
    double span_h = 24.0;
    /// Hours before the year start: treat as zero (default) or shrink the
    /// window and normalize by its effective length.
    enum class Warmup { ZeroPad, Truncate };
    Warmup warmup = Warmup::ZeroPad;
};

struct DeficitSplit {
    HourlySeries vrfb;  // low-frequency component
    HourlySeries lib;   // residual, deficit - vrfb exactly
};

DeficitSplit split_deficit(const HourlySeries& deficit, const ControllerParams& params);

}  // namespace microgrid
