#include "wep4/mesh.hpp"

#include "wep4/errors.hpp"
#include "wep4/geometry.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace wep4 {

void PolarGrid::validate() const
{
    if (!(r_min > 0.0)) {
        throw ParameterError("grid r_min must be positive (w = 0 is excluded)");
    }
    if (!(r_max > r_min)) {
        throw ParameterError("grid r_max must exceed r_min");
    }
    if (n_r < 2 || n_theta < 2) {
        throw ParameterError("grid needs at least 2 samples in r and theta");
    }
}

double PolarGrid::radius(int i) const
{
    return r_min + (r_max - r_min) * i / (n_r - 1);
}

double PolarGrid::angle(int j) const
{
    const int segments = theta_closed ? n_theta : n_theta - 1;
    return 2.0 * std::numbers::pi * j / segments;
}

QuadMesh4D sample_grid(const FamilyParams& p, const PolarGrid& g)
{
    g.validate();
    const PhiForm phi = phi_from_triple(family_triple(p));
    const MinimalCurve curve = integrate(phi);

    QuadMesh4D mesh{p, g, {}, {}};
    mesh.vertices.reserve(static_cast<std::size_t>(g.n_r) * g.n_theta);
    for (int i = 0; i < g.n_r; ++i) {
        for (int j = 0; j < g.n_theta; ++j) {
            const Complex w = std::polar(g.radius(i), g.angle(j));
            const SurfaceJet jet = surface_jet(phi, curve, w);
            MeshVertex vx;
            vx.u = w.real();
            vx.v = w.imag();
            vx.position = jet.position;
            vx.E = jet.E;
            vx.regular = jet.regular;
            if (jet.regular) {
                try {
                    vx.K = gauss_curvature(phi, w);
                } catch (const NonRegularPointError&) {
                    // E too small for the curvature stencil; leave K empty.
                }
            }
            mesh.vertices.push_back(vx);
        }
    }

    const auto index = [&](int i, int j) { return static_cast<std::size_t>(i) * g.n_theta + (j % g.n_theta); };
    const int last_j = g.theta_closed ? g.n_theta : g.n_theta - 1;
    for (int i = 0; i + 1 < g.n_r; ++i) {
        for (int j = 0; j < last_j; ++j) {
            const Quad q{index(i, j), index(i + 1, j), index(i + 1, j + 1), index(i, j + 1)};
            bool ok = true;
            for (auto k : q) {
                ok = ok && mesh.vertices[k].regular;
            }
            if (ok) {
                mesh.quads.push_back(q);
            }
        }
    }
    return mesh;
}

Projection Projection::parse(std::string_view axes)
{
    static constexpr std::string_view kLetters = "xyzw";
    if (axes.size() != 3) {
        throw UsageError("projection needs exactly three axes, got '" + std::string(axes) + "'");
    }
    std::array<int, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto pos = kLetters.find(axes[k]);
        if (pos == std::string_view::npos) {
            throw UsageError("unknown axis '" + std::string(1, axes[k]) + "' in projection");
        }
        out[k] = static_cast<int>(pos);
        for (std::size_t prev = 0; prev < k; ++prev) {
            if (out[prev] == out[k]) {
                throw UsageError("projection axes must be distinct");
            }
        }
    }
    return Projection(out);
}

std::string Projection::name() const
{
    static constexpr std::string_view kLetters = "xyzw";
    std::string s;
    for (int a : axes_) {
        s += kLetters[a];
    }
    return s;
}

Mesh3D project(const QuadMesh4D& mesh, const Projection& p)
{
    Mesh3D out;
    out.vertices.reserve(mesh.vertices.size());
    const auto& ax = p.axes();
    for (const auto& v : mesh.vertices) {
        out.vertices.emplace_back(v.position[ax[0]], v.position[ax[1]], v.position[ax[2]]);
    }
    out.quads = mesh.quads;
    return out;
}

MeshFormat parse_mesh_format(std::string_view name)
{
    if (name == "obj") {
        return MeshFormat::obj;
    }
    if (name == "ply") {
        return MeshFormat::ply;
    }
    if (name == "csv") {
        return MeshFormat::csv;
    }
    throw UsageError("unknown mesh format '" + std::string(name) + "' (expected obj, ply or csv)");
}

std::string format_real(double x)
{
    if (x == 0.0) {
        x = 0.0;
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::array<std::size_t, 3>> all_triangles(const Mesh3D& mesh)
{
    std::vector<std::array<std::size_t, 3>> tris;
    tris.reserve(2 * mesh.quads.size() + mesh.triangles.size());
    for (const auto& q : mesh.quads) {
        tris.push_back({q[0], q[1], q[2]});
        tris.push_back({q[0], q[2], q[3]});
    }
    tris.insert(tris.end(), mesh.triangles.begin(), mesh.triangles.end());
    return tris;
}

std::ofstream open_output(const std::filesystem::path& out)
{
    std::ofstream os(out, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open '" + out.string() + "' for writing");
    }
    return os;
}

void finish(std::ofstream& os, const std::filesystem::path& out)
{
    os.flush();
    if (!os) {
        throw std::runtime_error("write to '" + out.string() + "' failed");
    }
}

} // namespace

void write_obj(const Mesh3D& mesh, std::ostream& os)
{
    for (const auto& v : mesh.vertices) {
        os << "v " << format_real(v[0]) << ' ' << format_real(v[1]) << ' ' << format_real(v[2]) << '\n';
    }
    for (const auto& t : all_triangles(mesh)) {
        os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
}

void write_ply(const Mesh3D& mesh, std::ostream& os)
{
    const auto tris = all_triangles(mesh);
    os << "ply\n"
       << "format ascii 1.0\n"
       << "element vertex " << mesh.vertices.size() << '\n'
       << "property double x\n"
       << "property double y\n"
       << "property double z\n"
       << "element face " << tris.size() << '\n'
       << "property list uchar int vertex_indices\n"
       << "end_header\n";
    for (const auto& v : mesh.vertices) {
        os << format_real(v[0]) << ' ' << format_real(v[1]) << ' ' << format_real(v[2]) << '\n';
    }
    for (const auto& t : tris) {
        os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
}

void write_csv(const QuadMesh4D& mesh, std::ostream& os)
{
    os << "u,v,x,y,z,w,E,K,regular\n";
    for (const auto& v : mesh.vertices) {
        os << format_real(v.u) << ',' << format_real(v.v);
        for (int k = 0; k < 4; ++k) {
            os << ',' << format_real(v.position[k]);
        }
        os << ',' << format_real(v.E) << ',';
        if (v.K) {
            os << format_real(*v.K);
        }
        os << ',' << (v.regular ? 1 : 0) << '\n';
    }
}

Mesh3D read_obj(std::istream& is)
{
    Mesh3D mesh;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            std::array<std::string, 3> tok;
            ls >> tok[0] >> tok[1] >> tok[2];
            Vec3 p;
            for (int k = 0; k < 3; ++k) {
                const auto* first = tok[k].data();
                const auto res = std::from_chars(first, first + tok[k].size(), p[k]);
                if (res.ec != std::errc{} || tok[k].empty()) {
                    throw std::runtime_error("bad vertex on OBJ line " + std::to_string(lineno));
                }
            }
            mesh.vertices.push_back(p);
        } else if (tag == "f") {
            std::array<std::size_t, 3> t{};
            for (auto& idx : t) {
                long long k = 0;
                if (!(ls >> k) || k < 1) {
                    throw std::runtime_error("bad face on OBJ line " + std::to_string(lineno));
                }
                idx = static_cast<std::size_t>(k - 1);
            }
            mesh.triangles.push_back(t);
        }
    }
    return mesh;
}

void export_mesh(const Mesh3D& mesh, MeshFormat format, const std::filesystem::path& out)
{
    if (format == MeshFormat::csv) {
        throw UsageError("csv export carries the 4D vertex table; pass the unprojected mesh");
    }
    auto os = open_output(out);
    if (format == MeshFormat::obj) {
        write_obj(mesh, os);
    } else {
        write_ply(mesh, os);
    }
    finish(os, out);
}

void export_mesh(const QuadMesh4D& mesh, MeshFormat format, const std::filesystem::path& out)
{
    if (format != MeshFormat::csv) {
        throw UsageError("obj/ply export needs a 3D mesh; project the 4D mesh first");
    }
    auto os = open_output(out);
    write_csv(mesh, os);
    finish(os, out);
}

} // namespace wep4
