from .closed_forms import ClosedForms
from .closed_forms import closed_alpha
from .closed_forms import closed_classes
from .closed_forms import closed_forms
from .closed_forms import closed_mis_count
from .closed_forms import closed_vertex_cover
from .counting import CountPair
from .counting import gasket_count_pair
from .counting import mis_count
from .counting import pattern_counts
from .merges import MergeConfig
from .merges import enumerate_merge_configs
from .recurrences import STANDARD_RECURRENCES
from .recurrences import RecurrenceSet
from .tables import ClassTableGasket
from .tables import ClassTablePsw
from .tables import class_table
from .tables import gasket_class_table
from .tables import independence_number
from .tables import psw_class_table
from .witnesses import gasket_mis_witness
from .witnesses import mis_witness
from .witnesses import psw_mis_witness
from .witnesses import vertex_cover_witness

__all__ = [
  "STANDARD_RECURRENCES",
  "ClassTableGasket",
  "ClassTablePsw",
  "ClosedForms",
  "CountPair",
  "MergeConfig",
  "RecurrenceSet",
  "class_table",
  "closed_alpha",
  "closed_classes",
  "closed_forms",
  "closed_mis_count",
  "closed_vertex_cover",
  "enumerate_merge_configs",
  "gasket_class_table",
  "gasket_count_pair",
  "gasket_mis_witness",
  "independence_number",
  "mis_count",
  "mis_witness",
  "pattern_counts",
  "psw_class_table",
  "psw_mis_witness",
  "vertex_cover_witness",
]
