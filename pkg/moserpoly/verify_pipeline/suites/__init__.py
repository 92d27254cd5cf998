from .base import BaseSuite
from .base import PropertyResult
from .identities import IdentitiesSuite
from .oracle import OracleSuite
from .recovery import RecoverySuite
