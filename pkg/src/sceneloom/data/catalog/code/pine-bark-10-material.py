"""Pine Bark 10 Material generator (Materials)."""

PARAMS = {
    "size": 0.51,
    "detail": 1,
    "roughness": 0.512,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
