#include "ellfm/presets.hpp"

#include <string>

#include "ellfm/errors.hpp"

namespace ellfm {

SurfaceModel preset(std::string_view name)
{
    SurfaceModel m;
    if (name == "k3_quartic" || name == "enriques") {
        m.picard_rank = 1;
        m.gram = {{name == "k3_quartic" ? 4 : 2}};
        m.canonical = {0};
        m.omega_class = {0};
        m.k_trivial = true;
        m.x_k_trivial = true;
    } else if (name == "general_demo") {
        m.picard_rank = 2;
        m.gram = {{1, 0}, {0, -1}};
        m.canonical = {-3, 1};
        m.omega_class = m.canonical;
        m.k_trivial = false;
        m.x_k_trivial = true;
    } else {
        throw InputError("unknown preset '" + std::string(name) + "'");
    }
    m.validate();
    return m;
}

RationalVec preset_ample(std::string_view name)
{
    const auto m = preset(name);
    RationalVec h(static_cast<std::size_t>(m.picard_rank));
    h[0] = 1;
    return h;
}

std::vector<std::string_view> preset_names() { return {"k3_quartic", "enriques", "general_demo"}; }

} // namespace ellfm
