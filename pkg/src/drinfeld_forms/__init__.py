from .core.config import SuiteConfig
from .forms import FormLibrary
from .operators import OldformAlgebra
