"""Pine Bark 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.004,
    "detail": 4,
    "roughness": 0.113,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
