#include "rp2/json_io.hpp"

namespace rp2 {

Json report_json(const SurfaceReport& r) {
  Json j;
  j["V"] = r.vertex_count;
  j["E"] = r.edge_count;
  j["F"] = r.facet_count;
  j["chi"] = r.euler_char;
  j["connected"] = r.connected;
  j["boundary_components"] = r.boundary_components();
  switch (r.orientable) {
    case Orientability::Yes: j["orientable"] = true; break;
    case Orientability::No: j["orientable"] = false; break;
    case Orientability::Undefined: j["orientable"] = nullptr; break;
  }
  j["verdict"] = r.verdict_name();
  if (r.verdict == Verdict::NotASurface) j["reason"] = reason_name(r.reason);
  return j;
}

}  // namespace rp2
