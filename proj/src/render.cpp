#include "foldloop/render.hpp"

#include <sstream>
#include <vector>

namespace foldloop {

namespace {

// ASCII layout: strand k sits at column 4(k-1); closure lanes sit to the
// right, outermost lane for strand position 1 so the arcs nest without
// crossing.

int strand_column(int k) { return 4 * (k - 1); }

int lane_column(int m, int k) { return 4 * (m - 1) + 2 + 2 * (m - k); }

std::string render_ascii(const BraidWord& word) {
  const int m = word.strands();
  const int width = lane_column(m, 1) + 1;
  std::vector<std::string> rows;
  auto blank = [&] { return std::string(width, ' '); };

  // top closure arcs, outermost first
  for (int r = 0; r < m; ++r) {
    std::string row = blank();
    const int k = r + 1;  // arc turning at this row
    row[strand_column(k)] = '.';
    for (int c = strand_column(k) + 1; c < lane_column(m, k); ++c) row[c] = '-';
    row[lane_column(m, k)] = '.';
    for (int j = 1; j < k; ++j) {
      row[strand_column(j)] = '|';
      row[lane_column(m, j)] = '|';
    }
    rows.push_back(std::move(row));
  }

  auto plain_row = [&] {
    std::string row = blank();
    for (int k = 1; k <= m; ++k) {
      row[strand_column(k)] = '|';
      row[lane_column(m, k)] = '|';
    }
    return row;
  };

  rows.push_back(plain_row());
  for (const Generator& g : word.letters()) {
    const int c = strand_column(g.index);
    for (int part = 0; part < 3; ++part) {
      std::string row = blank();
      for (int k = 1; k <= m; ++k) {
        if (k != g.index && k != g.index + 1) row[strand_column(k)] = '|';
        row[lane_column(m, k)] = '|';
      }
      switch (part) {
        case 0:
          row[c + 1] = '\\';
          row[c + 3] = '/';
          break;
        case 1:
          row[c + 2] = g.sign > 0 ? '\\' : '/';
          break;
        case 2:
          row[c + 1] = '/';
          row[c + 3] = '\\';
          break;
      }
      rows.push_back(std::move(row));
    }
    rows.push_back(plain_row());
  }

  // bottom closure arcs, innermost first
  for (int r = 0; r < m; ++r) {
    std::string row = blank();
    const int k = m - r;
    row[strand_column(k)] = '\'';
    for (int c = strand_column(k) + 1; c < lane_column(m, k); ++c) row[c] = '-';
    row[lane_column(m, k)] = '\'';
    for (int j = 1; j < k; ++j) {
      row[strand_column(j)] = '|';
      row[lane_column(m, j)] = '|';
    }
    rows.push_back(std::move(row));
  }

  std::string out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const BraidWord& word) {
  const int m = word.strands();
  const int n = word.length();
  auto strand_x = [](int k) { return 40 * k; };
  auto lane_x = [&](int k) { return 40 * m + 20 * (m - k + 1); };
  const int top = 10 * m + 20;             // y of the braid's top ends
  const int bottom = top + 40 * n + 40;    // y of the braid's bottom ends
  const int width = lane_x(1) + 20;
  const int height = bottom + 10 * m + 10;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\">\n";

  auto line = [&](int x1, int y1, int x2, int y2, const char* stroke,
                  int stroke_width) {
    svg << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << stroke_width << "\"/>\n";
  };

  // closure arcs: up from the top ends, over to the right lanes, down
  // past the braid and back in at the bottom ends
  for (int k = 1; k <= m; ++k) {
    svg << "  <path class=\"closure\" fill=\"none\" stroke=\"black\" "
        << "stroke-width=\"2\" d=\"M " << strand_x(k) << ' ' << top << " V "
        << 10 * k << " H " << lane_x(k) << " V " << bottom + 10 * (m - k + 1)
        << " H " << strand_x(k) << " V " << bottom << "\"/>\n";
  }

  // top and bottom stubs
  for (int k = 1; k <= m; ++k) {
    line(strand_x(k), top, strand_x(k), top + 20, "black", 2);
    line(strand_x(k), bottom - 20, strand_x(k), bottom, "black", 2);
  }

  int y = top + 20;
  for (const Generator& g : word.letters()) {
    for (int k = 1; k <= m; ++k) {
      if (k != g.index && k != g.index + 1) {
        line(strand_x(k), y, strand_x(k), y + 40, "black", 2);
      }
    }
    const int xl = strand_x(g.index);
    const int xr = strand_x(g.index + 1);
    svg << "  <g class=\"crossing\" data-sign=\"" << (g.sign > 0 ? "+1" : "-1")
        << "\">\n  ";
    if (g.sign > 0) {
      // strand from the upper left passes over
      line(xr, y, xl, y + 40, "black", 2);
      svg << "  ";
      line(xl, y, xr, y + 40, "white", 10);
      svg << "  ";
      line(xl, y, xr, y + 40, "black", 2);
    } else {
      line(xl, y, xr, y + 40, "black", 2);
      svg << "  ";
      line(xr, y, xl, y + 40, "white", 10);
      svg << "  ";
      line(xr, y, xl, y + 40, "black", 2);
    }
    svg << "  </g>\n";
    y += 40;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_diagram(const BraidWord& word, DiagramFormat format) {
  return format == DiagramFormat::ascii ? render_ascii(word)
                                        : render_svg(word);
}

}  // namespace foldloop
