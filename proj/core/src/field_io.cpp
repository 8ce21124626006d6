#include "stokesmac/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stokesmac {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field(std::ostream& os, const char* name, const Field& f) {
    os << "field " << name << ' ' << family_name(f.family()) << ' ' << f.nx() << ' '
       << f.ny() << '\n';
    for (int i = 0; i < f.nx(); ++i) {
        for (int j = 0; j < f.ny(); ++j) {
            if (j) os << ' ';
            os << g17(f(i, j));
        }
        os << '\n';
    }
}

GridFamily family_from_name(const std::string& s) {
    if (s == "vertex") return GridFamily::Vertex;
    if (s == "cell") return GridFamily::CellCenter;
    if (s == "vedge") return GridFamily::VEdge;
    if (s == "hedge") return GridFamily::HEdge;
    throw std::invalid_argument("unknown grid family: " + s);
}

Field read_field(std::istream& is, const StaggeredGrid& grid, const std::string& expect) {
    std::string tag, name, fam;
    int nx = 0, ny = 0;
    if (!(is >> tag >> name >> fam >> nx >> ny) || tag != "field" || name != expect)
        throw std::invalid_argument("field dump: expected block '" + expect + "'");
    Field f(grid, family_from_name(fam));
    if (f.nx() != nx || f.ny() != ny)
        throw std::invalid_argument("field dump: extent mismatch in block '" + expect + "'");
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (!(is >> f(i, j)))
                throw std::invalid_argument("field dump: truncated block '" + expect + "'");
    if (f.has_ghosts()) f.set_ghosts_valid(true);
    return f;
}

}  // namespace

std::string fields_to_string(const StokesFields& sol) {
    const StaggeredGrid& g = sol.u1.grid();
    std::ostringstream os;
    os << "stokes-mac fields 1\n";
    os << "n " << g.n << '\n';
    os << "origin " << g17(g.x0) << ' ' << g17(g.y0) << '\n';
    os << "h " << g17(g.h) << '\n';
    os << "lambda " << g17(sol.lambda) << '\n';
    write_field(os, "u1", sol.u1);
    write_field(os, "u2", sol.u2);
    write_field(os, "p", sol.p);
    return os.str();
}

StokesFields fields_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string w0, w1, w2;
    int version = 0;
    if (!(is >> w0 >> w1 >> version) || w0 != "stokes-mac" || w1 != "fields" || version != 1)
        throw std::invalid_argument("field dump: bad magic");
    std::string key;
    int n = 0;
    double x0 = 0, y0 = 0, h = 0, lambda = 0;
    if (!(is >> key >> n) || key != "n") throw std::invalid_argument("field dump: missing n");
    if (!(is >> key >> x0 >> y0) || key != "origin")
        throw std::invalid_argument("field dump: missing origin");
    if (!(is >> key >> h) || key != "h") throw std::invalid_argument("field dump: missing h");
    if (!(is >> key >> lambda) || key != "lambda")
        throw std::invalid_argument("field dump: missing lambda");
    const StaggeredGrid grid(n, x0, y0, h * n);
    StokesFields sol{read_field(is, grid, "u1"), read_field(is, grid, "u2"),
                     read_field(is, grid, "p"), lambda};
    return sol;
}

void dump_fields(const StokesFields& sol, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << fields_to_string(sol);
    if (!os) throw std::runtime_error("write failed: " + path);
}

StokesFields read_fields(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return fields_from_string(buf.str());
}

}  // namespace stokesmac
