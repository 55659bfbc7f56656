#include "corfield/corres/types.hpp"

#include <cmath>
#include <sstream>

#include "corfield/error.hpp"

namespace corfield::corres {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kDirect:
      return "direct";
    case Provenance::kAugmented:
      return "augmented";
    case Provenance::kPropagated:
      return "propagated";
  }
  return "direct";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "direct") return Provenance::kDirect;
  if (name == "augmented") return Provenance::kAugmented;
  if (name == "propagated") return Provenance::kPropagated;
  throw DomainError("unknown provenance '" + name + "'");
}

void validate(const Correspondence& c) {
  if (c.image_q == c.image_s) {
    throw DomainError("correspondence: query and support images are equal ('" +
                      c.image_q + "')");
  }
  if (!std::isfinite(c.p_q.u) || !std::isfinite(c.p_q.v) ||
      !std::isfinite(c.p_s.u) || !std::isfinite(c.p_s.v)) {
    throw DomainError("correspondence: non-finite pixel coordinates");
  }
  if (!(c.confidence > 0.0) || !(c.confidence <= 1.0)) {
    std::ostringstream os;
    os << "correspondence: confidence " << c.confidence
       << " outside (0, 1]";
    throw DomainError(os.str());
  }
  if (c.provenance == Provenance::kDirect && c.confidence < 0.5) {
    std::ostringstream os;
    os << "correspondence: direct confidence " << c.confidence
       << " below 0.5";
    throw DomainError(os.str());
  }
}

ImageDims dims_from_cameras(const CameraMap& cameras) {
  ImageDims dims;
  for (const auto& [name, cam] : cameras) {
    dims[name] = ImageSize{cam.width(), cam.height()};
  }
  return dims;
}

}  // namespace corfield::corres
