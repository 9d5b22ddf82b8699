from .extensions import db
from .utils import get_current_time


class FuzzRun(db.Model):
    id = db.Column(db.Integer, primary_key=True)
    seed = db.Column(db.Integer, nullable=False)
    trials = db.Column(db.Integer, nullable=False)
    size_bound = db.Column(db.Integer, nullable=False)
    found = db.Column(db.Integer, default=0)
    failures = db.Column(db.Integer, default=0)
    created_at = db.Column(db.DateTime, default=get_current_time)

    witnesses = db.relationship('Witness', backref='run', lazy=True, cascade='all, delete-orphan')

    @classmethod
    def record(cls, report):
        """Speichert einen FuzzReport samt Witnesses."""
        run = cls(seed=report.seed, trials=report.trials, size_bound=report.size_bound,
                  found=report.found, failures=report.total_failures)
        for w in report.witnesses:
            run.witnesses.append(Witness(trial=w.trial, check=w.check, map_text=w.map_text,
                                         ring_text=w.ring_text, detail=w.detail))
        db.session.add(run)
        db.session.commit()
        return run

    def as_dict(self):
        return {
            'id': self.id,
            'seed': self.seed,
            'trials': self.trials,
            'size_bound': self.size_bound,
            'found': self.found,
            'failures': self.failures,
            'created_at': self.created_at.isoformat() if self.created_at else None,
        }


class Witness(db.Model):
    """Ein fehlgeschlagener Check: Map + Ring im Textformat."""
    id = db.Column(db.Integer, primary_key=True)
    run_id = db.Column(db.Integer, db.ForeignKey('fuzz_run.id'), nullable=False)
    trial = db.Column(db.Integer, nullable=False)
    check = db.Column(db.String(50), nullable=False)
    map_text = db.Column(db.Text, nullable=False)
    ring_text = db.Column(db.Text, nullable=False)
    detail = db.Column(db.String(255), nullable=True)
