#pragma once

#include <functional>
#include <string>

namespace axial {

/// Receives non-fatal numerical warnings (edge decay, backend disagreement,
/// extrapolated resampling). Defaults to stderr.
using WarningSink = std::function<void(const std::string&)>;

void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

/// Restores the previous sink on destruction; handy in tests.
class ScopedWarningSink {
 public:
  explicit ScopedWarningSink(WarningSink sink);
  ~ScopedWarningSink();
  ScopedWarningSink(const ScopedWarningSink&) = delete;
  ScopedWarningSink& operator=(const ScopedWarningSink&) = delete;

 private:
  WarningSink previous_;
};

}  // namespace axial
