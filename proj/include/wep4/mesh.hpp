#pragma once

#include "wep4/henneberg.hpp"
#include "wep4/types.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wep4 {

/// Polar parameter grid; r_min > 0 keeps the puncture out.
/// Closed grids use theta_j = 2 pi j / n_theta and wrap faces modulo n_theta;
/// open grids run theta_j = 2 pi j / (n_theta - 1) with no wrap.
struct PolarGrid {
    double r_min = 0.5;
    double r_max = 2.0;
    int n_r = 100;
    int n_theta = 200;
    bool theta_closed = true;

    /// Throws ParameterError on violated invariants.
    void validate() const;
    double radius(int i) const;
    double angle(int j) const;
};

struct MeshVertex {
    double u = 0.0;
    double v = 0.0;
    Vec4 position = Vec4::Zero();
    double E = 0.0;
    std::optional<double> K; ///< empty at non-regular vertices
    bool regular = false;
};

using Quad = std::array<std::size_t, 4>;

struct QuadMesh4D {
    FamilyParams params;
    PolarGrid grid;
    std::vector<MeshVertex> vertices; ///< row-major: index = i * n_theta + j
    std::vector<Quad> quads;          ///< only quads whose four corners are regular
};

QuadMesh4D sample_grid(const FamilyParams& p, const PolarGrid& g);

/// Three distinct axes out of x, y, z, w, in output order.
class Projection {
public:
    /// Accepts three distinct letters from "xyzw", e.g. "xyz", "yzw", "wxy".
    static Projection parse(std::string_view axes);

    const std::array<int, 3>& axes() const { return axes_; }
    std::string name() const;

private:
    explicit Projection(std::array<int, 3> axes)
        : axes_(axes)
    {
    }
    std::array<int, 3> axes_;
};

struct Mesh3D {
    std::vector<Vec3> vertices;
    std::vector<Quad> quads;
    std::vector<std::array<std::size_t, 3>> triangles;
};

Mesh3D project(const QuadMesh4D& mesh, const Projection& p);

enum class MeshFormat { obj, ply, csv };

MeshFormat parse_mesh_format(std::string_view name);

/// Shortest decimal that round-trips to the same double; "-0" is written as "0".
std::string format_real(double x);

/// Quads are split (0,1,2) + (0,2,3); explicit triangles follow. 1-based OBJ indices.
void write_obj(const Mesh3D& mesh, std::ostream& os);
void write_ply(const Mesh3D& mesh, std::ostream& os);
/// Header u,v,x,y,z,w,E,K,regular; K is empty at non-regular vertices.
void write_csv(const QuadMesh4D& mesh, std::ostream& os);

/// Reads "v" and "f" records; every face comes back as a triangle.
Mesh3D read_obj(std::istream& is);

/// OBJ/PLY need a projected mesh: a 4D mesh with those formats is a UsageError,
/// as is a 3D mesh with CSV. I/O failures throw std::runtime_error.
void export_mesh(const Mesh3D& mesh, MeshFormat format, const std::filesystem::path& out);
void export_mesh(const QuadMesh4D& mesh, MeshFormat format, const std::filesystem::path& out);

} // namespace wep4
