from .tracing import TracingService
from .killing import KillingService
from .harness import HarnessService
from .export import OutputFormat, emit_report, render_report
