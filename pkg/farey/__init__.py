from farey.farey_path import FareyPath
from farey.farey_path import is_adjacent
from farey.farey_path import path_from_stream
from farey.farey_path import revisit_histogram
from farey.farey_path import RevisitHistogram
from farey.geodesic import geodesic
from farey.geodesic import GeodesicArc
from farey.geodesic import Semicircle
from farey.geodesic import VerticalRay
from farey.svg_renderer import FareySvgRenderer
from farey.svg_renderer import format_px
from farey.svg_renderer import render_svg
from farey.svg_renderer import Viewport
