from enum import Enum, IntEnum

class Design(str, Enum):
    M1 = "m1"   # constant intercept
    M2 = "m2"   # one permanent break at T/2
    M3 = "m3"   # two breaks over thirds

class InterceptVariant(str, Enum):
    FOURIER = "fourier"
    STEP_M1 = "step_m1"
    STEP_M2 = "step_m2"
    STEP_M3 = "step_m3"

class ReportFormat(str, Enum):
    TEXT = "text"
    CSV = "csv"
    MARKDOWN = "markdown"

class OptimizerMethod(str, Enum):
    NELDER_MEAD = "nelder-mead"
    BFGS = "bfgs"       # quasi-Newton with central-difference gradients

class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    DATA = 3
    NUMERICAL = 4
