from classifier.certificates import CertificateDetector
from classifier.certificates import CertificateKind
from classifier.certificates import CycleCertificate
from classifier.certificates import detect_certificate
from classifier.certificates import slot_map_step
from classifier.certificates import verify_certificate
from classifier.cf_classifier import CfClassifier
from classifier.cf_classifier import classify
from classifier.report import ClassificationReport
from classifier.report import Mode
from classifier.report import Status
from classifier.tail_values import extended_rational_value_case2a
from classifier.tail_values import rational_value_from_tail
from classifier.tail_values import tail_tendency
from classifier.tail_values import TailTendency
from classifier.tail_values import trailing_run
