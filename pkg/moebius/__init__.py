from moebius.convergents import ConvergentSeq
from moebius.convergents import convergents
from moebius.convergents import evaluate_finite
from moebius.convergents import iter_continuants
from moebius.enclosure import enclose_to_digits
from moebius.enclosure import enclose_value
from moebius.enclosure import Enclosure
from moebius.enclosure import format_decimal
from moebius.enclosure import iter_enclosures
from moebius.moebius_map import apply
from moebius.moebius_map import compose
from moebius.moebius_map import composite_map
from moebius.moebius_map import MoebiusMap
from moebius.moebius_map import s_map
