namespace tenval {}
