#ifndef LOVASZ_SURFACE_CLASS_HPP
#define LOVASZ_SURFACE_CLASS_HPP

#include <string>

namespace lovasz {

/**
 * Homeomorphism class of a closed connected surface. Orientable genus k has
 * Euler characteristic 2 - 2k, non-orientable genus k has 2 - k.
 */
struct SurfaceClass
{
    bool orientable = true;
    int genus = 0;
    int euler = 2;

    /// Throws PreconditionError when the pair is not realizable (odd
    /// orientable defect, positive non-orientable genus below 1, ...).
    static SurfaceClass from_euler(int euler, bool orientable);

    /// "OS_1", "NS_2", ...
    std::string name() const
    {
        return (orientable ? "OS_" : "NS_") + std::to_string(genus);
    }

    bool is_sphere() const noexcept { return orientable && genus == 0; }

    bool operator==(const SurfaceClass&) const = default;
};

}   // namespace lovasz

#endif
