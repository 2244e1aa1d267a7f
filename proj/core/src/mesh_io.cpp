#include "smenc/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace smenc {

void write_surface(const LiftedSurface& surface, const std::string& path) {
    if (!surface.mesh || surface.mesh->vertex_count() == 0)
        throw IOError("refusing to export an empty surface");
    if (surface.fast.size() != surface.mesh->vertices.size())
        throw IOError("surface height array does not match its mesh");

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IOError("cannot open for writing: " + tmp);
        char line[128];
        for (int i = 0; i < surface.mesh->vertex_count(); ++i) {
            const Point2& p = surface.mesh->vertices[i];
            std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n",
                          surface.fast[i], p.y, p.z);
            out << line;
        }
        for (const auto& f : surface.mesh->faces) {
            std::snprintf(line, sizeof line, "f %d %d %d\n", f[0] + 1, f[1] + 1,
                          f[2] + 1);
            out << line;
        }
        if (!out) throw IOError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IOError("cannot move temp file onto " + path);
    }
}

LiftedSurface read_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open: " + path);

    auto mesh = std::make_shared<PlanarMesh>();
    LiftedSurface s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            double x, y, z;
            if (!(ls >> x >> y >> z)) throw IOError("malformed vertex line in " + path);
            s.fast.push_back(x);
            mesh->vertices.push_back({y, z});
        } else if (tag == "f") {
            int i, j, k;
            if (!(ls >> i >> j >> k)) throw IOError("malformed face line in " + path);
            mesh->faces.push_back({i - 1, j - 1, k - 1});
        } else {
            throw IOError("unknown record '" + tag + "' in " + path);
        }
    }
    const int n = mesh->vertex_count();
    for (const auto& f : mesh->faces)
        for (int k = 0; k < 3; ++k)
            if (f[k] < 0 || f[k] >= n) throw IOError("face index out of range in " + path);
    mesh->star.resize(n);
    for (int fi = 0; fi < mesh->face_count(); ++fi)
        for (int k = 0; k < 3; ++k) mesh->star[mesh->faces[fi][k]].push_back(fi);
    s.mesh = std::move(mesh);
    return s;
}

} // namespace smenc
