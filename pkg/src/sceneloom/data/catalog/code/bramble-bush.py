"""Bramble Bush generator (Plants)."""

PARAMS = {
    "size": 2.942,
    "detail": 3,
    "roughness": 0.671,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bramble Bush"
    for key, value in params.items():
        node[key] = value
    return node
