from cf_core.budget import AccessBudget
from cf_core.budget import BudgetExhaustedError
from cf_core.budget import StepBudget
from cf_core.coefficient_stream import canonicalize
from cf_core.coefficient_stream import coefficient_at
from cf_core.coefficient_stream import CoefficientStream
from cf_core.coefficient_stream import EventuallyPeriodic
from cf_core.coefficient_stream import Finite
from cf_core.coefficient_stream import Generator
from cf_core.conversion import neg_from_regular
from cf_core.conversion import regular_from_neg
from cf_core.extended_rational import ExtendedRational
from cf_core.extended_rational import INFINITY
