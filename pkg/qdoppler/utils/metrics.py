class AverageMeter(object):
    """Running mean, sum and maximum of per-point wall times."""

    def __init__(self):
        self.count = 0
        self.sum = 0.
        self.max = 0.
        self.val = 0.

    @property
    def avg(self):
        return self.sum / self.count if self.count else 0.

    def update(self, val, n=1):
        self.val = val
        self.sum += val * n
        self.count += n
        self.max = max(self.max, val)
