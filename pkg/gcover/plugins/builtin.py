from .analyze import AnalyzePlugin
from .catalog import CatalogPlugin
from .covers import CoversPlugin
from .help import HelpPlugin
from .sigma import SigmaPlugin
from .verify import VerifyPlugin
from ..suites.c3_formulas import C3FormulasPlugin
from ..suites.corollary_c import CorollaryCPlugin
from ..suites.corollary_e import CorollaryEPlugin
from ..suites.corollary_f import CorollaryFPlugin
from ..suites.oracles import OraclesPlugin
from ..suites.quaternion import QuaternionPlugin
from ..suites.remark import RemarkPlugin
from ..suites.theorem_a import TheoremAPlugin
from ..suites.theorem_b import TheoremBPlugin
from ..suites.theorem_d import TheoremDPlugin


BUILTIN_PLUGINS = [
    AnalyzePlugin,
    CatalogPlugin,
    CoversPlugin,
    HelpPlugin,
    SigmaPlugin,
    VerifyPlugin,
    TheoremAPlugin,
    TheoremBPlugin,
    CorollaryCPlugin,
    TheoremDPlugin,
    CorollaryEPlugin,
    CorollaryFPlugin,
    C3FormulasPlugin,
    RemarkPlugin,
    OraclesPlugin,
    QuaternionPlugin,
]
