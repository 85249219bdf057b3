"""Pine Bark 06 Material generator (Materials)."""

PARAMS = {
    "size": 1.291,
    "detail": 3,
    "roughness": 0.209,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
